a = {1: 2}
for k in a:
    print(k)
