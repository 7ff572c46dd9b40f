p = x ** 2
