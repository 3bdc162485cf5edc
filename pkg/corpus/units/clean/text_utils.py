"""Small text helpers."""


def slug(title):
    out = []
    for ch in title.lower():
        if ch.isalnum():
            out.append(ch)
        elif out and out[-1] != "-":
            out.append("-")
    return "".join(out).strip("-")


def truncate(text, n):
    if len(text) <= n:
        return text
    return text[: n - 1] + "~"


def count_words(text):
    words = 0
    inside = False
    for ch in text:
        if ch.isspace():
            inside = False
        elif not inside:
            inside = True
            words += 1
    return words
