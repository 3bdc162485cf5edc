"""One request value flows into both the database and the shell."""


def backup_user(cursor):
    user = request_args("user")
    cursor.execute("DELETE FROM pending WHERE user = '" + user + "'")
    os_system("tar czf /backups/" + user + ".tgz /home/" + user)
    return True
