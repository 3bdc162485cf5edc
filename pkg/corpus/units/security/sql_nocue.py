"""Looks innocent: the statement text comes from a helper."""


def archive(store, untrusted_key):
    stmt = build_statement(untrusted_key)
    store.execute(stmt)
    return True
