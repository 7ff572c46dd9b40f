m = n % 2
