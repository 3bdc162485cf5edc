"""Report query built with percent formatting."""


def monthly_report(cursor, month):
    year = get_param("year")
    sql = "SELECT total FROM sales WHERE year = %s AND month = %d" % (year, month)
    cursor.execute(sql)
    return cursor.fetchall()
