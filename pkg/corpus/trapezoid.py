def trapezoid(f, n):
    a = 0
    b = 1
    span = b - a
    width = span / n
    fa = f(a)
    fb = f(b)
    total = fa + fb
    total = total / 2
    i = 1
    while i < n:
        step = i * width
        x = a + step
        fx = f(x)
        total = total + fx
        i = i + 1
    area = width * total
    return area
