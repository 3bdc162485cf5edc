"""Plain geometry helpers."""


class Rect:
    def __init__(self, w, h):
        self.w = w
        self.h = h

    def area(self):
        return self.w * self.h

    def perimeter(self):
        return 2 * (self.w + self.h)

    def scale(self, k):
        return Rect(self.w * k, self.h * k)

    def is_square(self):
        return self.w == self.h


def total_area(rects):
    total = 0
    for r in rects:
        total += r.area()
    return total
