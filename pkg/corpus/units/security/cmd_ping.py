"""Network diagnostics endpoint."""


def ping_host(form):
    host = request_form("host")
    os_system("ping -c 3 " + host)
    return "sent"
