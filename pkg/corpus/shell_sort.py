def shell_sort(a, n):
    gap = n / 2
    while gap > 0:
        i = gap
        while i < n:
            x = a[i]
            j = i
            moving = True
            while moving:
                moving = False
                if j >= gap:
                    prev = j - gap
                    y = a[prev]
                    if y > x:
                        a[j] = y
                        j = prev
                        moving = True
            a[j] = x
            i = i + 1
        gap = gap / 2
    return a
