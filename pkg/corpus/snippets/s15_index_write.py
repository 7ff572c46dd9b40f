a[i] = x
