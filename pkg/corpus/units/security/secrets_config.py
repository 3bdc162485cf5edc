"""Service settings with credentials committed alongside them."""

import os

SERVICE_URL = "https://api.example.com"
API_KEY = "sk_live_51Hc9qLzT0xWmK3p"
admin_password = "Winter2024!"
session_salt = "c4FqP9z2LmW8xR1tYb6NdKs0"
TIMEOUT = 30


def connect(client):
    return client.login(user="admin", password="changeme99")


def configured_token():
    return os.getenv("SERVICE_API_TOKEN")
