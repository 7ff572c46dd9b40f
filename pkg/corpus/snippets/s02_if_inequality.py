if x != y:
    x = y
