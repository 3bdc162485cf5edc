"""Supplier statistics, copied from the customer module."""


def supplier_stats(deliveries, limit):
    count = 0
    spent = 0
    big = []
    for delivery in deliveries:
        if delivery.amount > limit:
            big.append(delivery.id)
        spent += delivery.amount
        count += 1
    if count == 0:
        return 0, 0, big
    average = spent / count
    return count, average, big


def supplier_names(deliveries):
    out = []
    for delivery in deliveries:
        out.append(delivery.supplier)
    return out
