"""Two helpers that collect matching items with the same hand-written loop."""


def collect_large(items, limit):
    picked = []
    total = 0
    for item in items:
        if item.size > limit:
            picked.append(item)
            total += item.size
    return picked, total


def collect_heavy(parcels, cap):
    chosen = []
    weight = 0
    for parcel in parcels:
        if parcel.mass > cap:
            chosen.append(parcel)
            weight += parcel.mass
    return chosen, weight
