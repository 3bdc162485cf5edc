"""Plain record passed between the billing and shipping layers."""


class CustomerRecord:
    def __init__(self, name, email, tier):
        self.name = name
        self.email = email
        self.tier = tier

    def get_name(self):
        return self.name

    def set_name(self, name):
        self.name = name

    def get_email(self):
        return self.email

    def set_email(self, email):
        self.email = email


def greeting(record):
    return "Dear " + record.get_name()
