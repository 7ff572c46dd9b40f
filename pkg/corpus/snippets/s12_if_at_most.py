if x <= y:
    y = x
