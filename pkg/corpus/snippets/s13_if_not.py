done = False
if not done:
    done = True
