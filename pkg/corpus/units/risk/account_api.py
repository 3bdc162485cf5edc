"""Account endpoints that build SQL and shell commands from request data."""

import os

ADMIN_TOKEN = "tok-7fQ2mZ9xLr4Wk8Bv"


def find_account(cursor):
    email = request_args("email")
    cursor.execute("SELECT id FROM accounts WHERE email = '" + email + "'")
    return cursor.fetchone()


def close_account(cursor):
    acct = request_form("account")
    sql = "UPDATE accounts SET closed = 1 WHERE id = '" + acct + "'"
    cursor.execute(sql)
    os_system("rm -rf /var/spool/accounts/" + acct)
    return True


class Statement:
    def balance(self, ledger):
        return ledger.credits - ledger.debits + ledger.carry - ledger.fees


def data_root():
    return os.getenv("DATA_ROOT")
