"""Query assembled over several statements before it reaches the cursor."""


def find_user(db):
    name = request_args("name")
    prefix = "SELECT id FROM users WHERE name = '"
    query = prefix + name
    query = query + "' AND active = 1"
    db.execute(query)
    return db.fetchone()
