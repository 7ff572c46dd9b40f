setup()
work(3, 4)
