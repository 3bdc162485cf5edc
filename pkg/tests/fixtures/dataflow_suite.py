"""Small functions exercising branches, loops, try blocks, sources, sinks and sanitizers."""


def straight(cursor):
    uid = request_args("id")
    q = "SELECT * FROM u WHERE id=" + uid
    cursor.execute(q)


def cast_between(cursor):
    uid = request_args("id")
    uid = int(uid)
    q = "SELECT * FROM u WHERE id=" + str(uid)
    cursor.execute(q)


def branch_join(cursor, flag):
    x = request_args("x")
    if flag:
        x = "constant"
    cursor.execute("SELECT " + x)


def branch_both(cursor, flag):
    if flag:
        x = request_args("a")
    else:
        x = request_form("b")
    cursor.execute(x)


def loop_redefine(n):
    total = 0
    i = 0
    while i < n:
        total = total + i
        i = i + 1
    return total


def loop_taint(cursor, rows):
    acc = ""
    for r in rows:
        acc = acc + r
    acc = acc + request_args("tail")
    cursor.execute(acc)


def loop_carried(cursor):
    q = "SELECT 1"
    k = 0
    while k < 3:
        cursor.execute(q)
        q = q + request_args("more")
        k += 1


def break_out(cursor, items):
    found = None
    for it in items:
        if it:
            found = request_args(it)
            break
    os_system("echo " + str(found))


def continue_skip(items):
    out = 0
    for it in items:
        if it < 0:
            continue
        out = out + it
    return out


def try_flow(cursor):
    v = "none"
    try:
        v = request_args("v")
        cursor.execute(v)
    except ValueError:
        v = "fallback"
    os_system(v)


def try_finally(cursor):
    v = input()
    try:
        cursor.execute("SELECT " + v)
    finally:
        v = ""
    return v


def param_source(user_input, cursor):
    cursor.execute("DELETE FROM t WHERE k = " + user_input)


def raw_param(raw_name):
    os_system("ls " + raw_name)


def quoted(cmd_arg):
    c = input()
    safe = shlex.quote(c)
    os_system("ls " + safe)


def escaped_html():
    name = request.args.get("name")
    return render_html("<p>" + html.escape(name) + "</p>")


def xss_plain():
    name = request.args.get("name")
    page = "<p>" + name + "</p>"
    return render_html(page)


def direct_sink(cursor):
    cursor.execute("SELECT " + request_args("q"))


def two_sinks(cursor):
    v = request_args("v")
    cursor.execute("SELECT " + v)
    os_system("echo " + v)


def reassign_clean(cursor):
    v = request_args("v")
    v = "fixed"
    cursor.execute(v)


def aug_assign(cursor):
    q = "SELECT * FROM t WHERE a = "
    q += request_args("a")
    cursor.execute(q)


def tuple_assign(cursor):
    a, b = request_args("a"), "b"
    cursor.execute(a + b)


def nested_if(cursor, p, q):
    v = request_args("v")
    if p:
        if q:
            v = v + "x"
        else:
            v = "y"
    cursor.execute(v)


def while_else(cursor, n):
    s = ""
    while n > 0:
        s = s + request_args("s")
        n -= 1
    else:
        s = s + "!"
    cursor.execute(s)


def two_vars(cursor):
    a = request_args("a")
    b = a
    c = b + a
    cursor.execute(c)


def attr_source(cursor):
    data = request.form
    cursor.execute("SELECT " + data)


def argv_cmd():
    target = sys.argv
    os_system("rm " + target)


def sanitizer_partial(cursor):
    v = request_args("v")
    w = int(v) + v
    cursor.execute(w)


def no_source(cursor, rows):
    q = "SELECT count(*) FROM t"
    for r in rows:
        q = q + " "
    cursor.execute(q)


def return_early(cursor, flag):
    v = request_args("v")
    if flag:
        return None
    cursor.execute(v)


def env_source():
    home = os.environ
    os_system("cd " + home)


def call_chain(cursor):
    v = request_args("v")
    w = v.strip()
    x = w.lower()
    cursor.execute(x)


def kwarg_sink():
    v = input()
    return render_template_string(v)


def subprocess_list(host):
    h = request_args("h")
    subprocess.call("ping " + h)


def dead_after_loop(cursor, items):
    v = ""
    for it in items:
        v = request_args(it)
    v = "done"
    cursor.execute(v)
