a = [1, 2, 3]
for e in a:
    print(e)
