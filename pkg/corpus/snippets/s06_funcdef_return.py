def add(p, q):
    s = p + q
    return s
