x = a[i]
