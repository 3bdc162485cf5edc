"""Request values that are converted or quoted before use."""

import shlex


def show_page(cursor):
    page = int(request_args("page"))
    cursor.execute("SELECT * FROM posts LIMIT 10 OFFSET " + str(page * 10))
    return cursor.fetchall()


def list_dir(form):
    target = shlex.quote(request_form("dir"))
    os_system("ls -l " + target)
    return True
