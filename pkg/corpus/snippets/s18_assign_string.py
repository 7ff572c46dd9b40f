s = "hello"
