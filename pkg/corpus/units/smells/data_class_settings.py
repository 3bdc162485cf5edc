"""Configuration holder with getters and setters for every field."""


class ConnectionData:
    timeout = 30

    def __init__(self, host, port):
        self.host = host
        self.port = port

    def get_host(self):
        return self.host

    def set_host(self, host):
        self.host = host

    def get_port(self):
        return self.port

    def set_port(self, port):
        self.port = port

    def get_timeout(self):
        return self.timeout
