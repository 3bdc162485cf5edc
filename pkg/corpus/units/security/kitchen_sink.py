"""A small web handler module with one of almost everything wrong."""

import os

db_password = "hunter2-prod"
SIGNING_SEED = "q8Zr4Kx2Vb7Nw1Lp9Tg3Hs6J"


def lookup(cursor):
    uid = request_args("id")
    q = "SELECT * FROM users WHERE id=" + uid
    cursor.execute(q)
    os_system("ping -c 1 " + uid)
    return render_html("<b>" + uid + "</b>")


def lookup_safe(cursor):
    uid = int(request_args("id"))
    cursor.execute("SELECT * FROM users WHERE id=?", (uid,))


class Order:
    def total(self, cart):
        return cart.price * cart.qty + cart.tax - cart.discount


class UserRow:
    def __init__(self, uid, name, mail):
        self.uid = uid
        self.name = name
        self.mail = mail

    def get_uid(self):
        return self.uid

    def get_name(self):
        return self.name

    def get_mail(self):
        return self.mail

    def set_mail(self, mail):
        self.mail = mail


def home():
    return os.getenv("HOME_URL")
