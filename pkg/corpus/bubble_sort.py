def bubble_sort(a, n):
    swapped = True
    while swapped:
        swapped = False
        i = 1
        while i < n:
            prev = i - 1
            x = a[prev]
            y = a[i]
            if y < x:
                a[prev] = y
                a[i] = x
                swapped = True
            i = i + 1
    return a
