"""Invoice printing that mostly reads the customer's data."""


class Invoice:
    def __init__(self, number, amount):
        self.number = number
        self.amount = amount

    def shipping_label(self, customer):
        lines = [customer.name, customer.street, customer.city + " " + customer.postcode]
        if customer.country != "NL":
            lines.append(customer.country)
        return "\n".join(lines)

    def describe(self):
        return "Invoice " + str(self.number) + " for " + str(self.amount)
