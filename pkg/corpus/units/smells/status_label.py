"""Status codes mapped to short labels."""


def status_label(code):
    if code == 200:
        return "ok"
    if code == 201:
        return "created"
    if code == 204:
        return "empty"
    if code == 301:
        return "moved"
    if code == 304:
        return "cached"
    if code == 400:
        return "bad"
    if code == 401:
        return "denied"
    if code == 403:
        return "blocked"
    if code == 404:
        return "missing"
    if code == 500:
        return "broken"
    return "other"
