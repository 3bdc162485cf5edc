"""Webhook verification with the shared value pasted in."""

upstream_signature = "Zk29XqLm3Pv8Rt1Wc5Yh7Nb0"


def verify(payload, digest):
    return digest == upstream_signature
