"""User-facing messages; long, but plainly not credentials."""

WELCOME = "Welcome back, friend"
GOODBYE = "Thanks for visiting us"
RETRY = "Please retry in a minute"


def banner(name):
    if not name:
        return "Nobody is signed in"
    return WELCOME + ", " + name
