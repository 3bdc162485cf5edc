"""Price calculation living in the wrong class."""


class Checkout:
    def __init__(self, currency):
        self.currency = currency

    def compute_total(self, cart):
        subtotal = cart.price * cart.quantity
        tax = subtotal * cart.tax_rate
        return subtotal + tax - cart.discount

    def currency_symbol(self):
        if self.currency == "EUR":
            return "E"
        return "$"
