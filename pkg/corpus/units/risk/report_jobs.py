"""Report jobs driven by query-string parameters."""

SMTP_SECRET = "mX4tB9qL2vN7rK5wZ8cJ"


def report_rows(cursor):
    region = request_args("region")
    sql = "SELECT * FROM sales WHERE region = '%s'" % region
    cursor.execute(sql)
    return cursor.fetchall()


def export_report(cursor):
    name = request_args("name")
    cursor.execute("DELETE FROM exports WHERE name = '" + name + "'")
    os_system("zip -r /exports/" + name + ".zip /reports/" + name)
    return name


class Mailer:
    def envelope(self, msg):
        return msg.sender + msg.recipient + msg.subject + msg.body + msg.footer
