"""Customer statistics, computed by hand."""


def customer_stats(orders, threshold):
    count = 0
    spent = 0
    big = []
    for order in orders:
        if order.amount > threshold:
            big.append(order.id)
        spent += order.amount
        count += 1
    if count == 0:
        return 0, 0, big
    average = spent / count
    return count, average, big
