b = [e for e in a]
c = 1
