"""Order totals computed in one sprawling loop pair."""


def process_orders(orders, limit):
    total = 0
    count = 0
    for order in orders:
        if order.qty > limit:
            total += order.qty * 2
        elif order.qty < 0:
            total -= 1
        else:
            total += order.qty
        if order.rush and order.qty > 3:
            count += 2
    for order in orders:
        if order.discount:
            total -= order.discount
        if order.tax > 0:
            total += order.tax
        if order.gift or order.wrap:
            count += 1
    return total, count


def order_count(orders):
    return len(orders)
