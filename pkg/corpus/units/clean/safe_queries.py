"""Database access that keeps request values out of the SQL text."""

import os


def find_user(cursor):
    name = request_args("name")
    cursor.execute("SELECT id FROM users WHERE name = ?", (name,))
    return cursor.fetchone()


def page(cursor):
    size = int(request_args("size"))
    cursor.execute("SELECT id FROM items LIMIT ?", (size,))
    return cursor.fetchall()


def db_password():
    return os.environ["DB_PASSWORD"]
