"""Warehouse bookkeeping that grew into one class doing everything."""

import json


class InventoryManager:
    """Tracks stock, pricing, persistence and reporting in a single place."""

    def __init__(self, db, mailer):
        self.db = db
        self.mailer = mailer
        self.stock = {}
        self.prices = {}
        self.cache = {}
        if db is None or mailer is None:
            self.offline = True

    def add_item(self, sku, qty):
        if qty <= 0:
            raise ValueError("quantity must be positive")
        if sku in self.stock:
            self.stock[sku] += qty
        else:
            self.stock[sku] = qty

    def remove_item(self, sku, qty):
        if sku not in self.stock:
            return False
        if self.stock[sku] < qty:
            return False
        self.stock[sku] -= qty
        return True

    def set_price(self, sku, price):
        if price < 0:
            raise ValueError("negative price")
        if sku not in self.stock:
            self.stock[sku] = 0
        self.prices[sku] = price

    def price_of(self, sku):
        if sku in self.cache:
            return self.cache[sku]
        if sku not in self.prices:
            return 0
        self.cache[sku] = self.prices[sku]
        return self.prices[sku]

    def stock_value(self):
        total = 0
        for sku in self.stock:
            if sku in self.prices:
                total += self.stock[sku] * self.prices[sku]
        return total

    def low_stock(self, limit):
        out = []
        for sku in self.stock:
            if self.stock[sku] < limit:
                out.append(sku)
        return out

    def save(self):
        if not self.stock:
            return 0
        payload = json.dumps(self.stock)
        if self.db is None:
            return 0
        self.db.put("stock", payload)
        return len(payload)

    def load(self):
        raw = self.db.get("stock")
        if raw is None:
            self.stock = {}
        elif raw == "":
            self.stock = {}
        else:
            self.stock = json.loads(raw)

    def notify_low(self, limit):
        items = self.low_stock(limit)
        if not items:
            return False
        if self.mailer is None:
            return False
        self.mailer.send("stock", ", ".join(items))
        return True

    def render_report(self):
        lines = []
        for sku in sorted(self.stock):
            if self.stock[sku] == 0:
                lines.append(sku + ": out")
            else:
                lines.append(sku + ": " + str(self.stock[sku]))
        return "\n".join(lines)

    def clear_cache(self):
        if self.cache and len(self.cache) > 0:
            self.cache = {}
            return True
        return False

    def discount(self, sku, pct):
        if pct <= 0 or pct >= 100:
            return self.price_of(sku)
        return self.price_of(sku) * (100 - pct) / 100

    def restock_plan(self, target):
        plan = {}
        for sku in self.stock:
            if self.stock[sku] < target:
                plan[sku] = target - self.stock[sku]
        return plan

    def merge(self, other):
        for sku in other:
            if sku in self.stock:
                self.stock[sku] += other[sku]
            else:
                self.stock[sku] = other[sku]

    def audit(self):
        bad = []
        for sku in self.stock:
            if self.stock[sku] < 0:
                bad.append(sku)
        return bad

    def export_csv(self):
        rows = ["sku,qty"]
        for sku in sorted(self.stock):
            if sku in self.prices:
                rows.append(sku + "," + str(self.stock[sku]))
        return "\n".join(rows)
