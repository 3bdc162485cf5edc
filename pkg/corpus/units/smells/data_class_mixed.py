"""A record that also owns a bit of behaviour, so it is not a bare data holder."""


class Subscription:
    def __init__(self, plan, seats, price):
        self.plan = plan
        self.seats = seats
        self.price = price

    def get_plan(self):
        return self.plan

    def get_seats(self):
        return self.seats

    def set_seats(self, seats):
        self.seats = seats
