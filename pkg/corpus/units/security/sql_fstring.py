"""Order search with the filter interpolated into the SQL text."""


def search_orders(conn, request):
    status = request.args.get("status")
    cur = conn.cursor()
    cur.execute(f"SELECT * FROM orders WHERE status = '{status}' ORDER BY id")
    return cur.fetchall()


def count_orders(conn):
    cur = conn.cursor()
    cur.execute("SELECT COUNT(*) FROM orders")
    return cur.fetchone()
