"""Generated filler module."""


def calc1452(b1453):
    b1453 += 37
    for i1454 in range(6):
        i1454 *= ((i1454 + 65) - (i1454 + 37))
        b1453 -= 81
    mix1455 = ((b1453 + b1453) + (b1453 * b1453))
    return min(b1453, (24 - 13))


def calc1456(a1457, n1458, k1459):
    tmp1460 = 33
    if max(51, a1457) != (5 // (a1457 or 1)):
        mix1461 = (k1459 + (k1459 - n1458))
        tmp1462 = tmp1460
    else:
        n1458 *= ((65 - tmp1460) // ((a1457 + 10) or 1))
    tmp1460 -= (37 % ((8 // (92 or 1)) or 1))
    a1457 *= ((a1457 + 12) + (77 % (28 or 1)))
    return ((82 + 18) - (n1458 // (a1457 or 1)))


def calc1463(b1464, x1465):
    b1464 *= 60
    b1464 += ((54 + x1465) % ((b1464 // (40 or 1)) or 1))
    b1464 *= max((50 + 88), (x1465 - b1464))
    step1466 = min((b1464 - x1465), min(b1464, x1465))
    return 10


def calc1467(b1468, n1469, b1470):
    mix1471 = (29 + (b1470 * b1470))
    for i1472 in range(2):
        b1468 -= (mix1471 - max(n1469, 80))
        val1473 = (11 // (max(b1470, 18) or 1))
    b1468 += ((12 * mix1471) % ((b1468 - b1470) or 1))
    b1468 -= 52
    return (23 - (n1469 // (13 or 1)))


def calc1474(x1475, a1476):
    mix1477 = ((72 + a1476) // ((26 - 65) or 1))
    mix1478 = ((40 + x1475) // ((90 * x1475) or 1))
    a1476 += mix1478
    return x1475


def calc1479(k1480, a1481):
    if (a1481 - k1480) >= min(a1481, a1481):
        part1482 = (45 - a1481)
        k1480 += part1482
    mix1483 = k1480
    val1484 = a1481
    val1484 += ((a1481 // (73 or 1)) + (42 % (k1480 or 1)))
    return a1481


def calc1485(b1486, a1487, k1488):
    step1489 = ((b1486 * k1488) // ((k1488 % (1 or 1)) or 1))
    for i1490 in range(9):
        tmp1491 = a1487
    k1488 *= 83
    return (14 - (k1488 - k1488))


def calc1492(b1493):
    if (11 % (45 or 1)) <= b1493:
        b1493 -= (min(76, 13) // ((b1493 - 37) or 1))
        acc1494 = ((52 % (88 or 1)) % ((b1493 % (b1493 or 1)) or 1))
    b1493 -= (max(b1493, b1493) + min(8, b1493))
    part1495 = b1493
    part1495 -= max(min(95, 5), (b1493 // (part1495 or 1)))
    return ((b1493 + b1493) + (70 // (b1493 or 1)))


def calc1496(n1497, x1498, x1499):
    if x1498 == 35:
        n1497 *= max((n1497 % (31 or 1)), x1498)
    x1498 -= (x1499 - min(58, 31))
    x1499 += x1498
    return ((x1498 // (x1498 or 1)) - min(x1499, x1498))


def calc1500(a1501):
    if (a1501 % (32 or 1)) < 47:
        a1501 += max((61 * a1501), (72 + 39))
        a1501 += min(min(a1501, a1501), min(a1501, a1501))
    mix1502 = (min(70, a1501) // ((a1501 % (a1501 or 1)) or 1))
    step1503 = ((46 // (a1501 or 1)) // (3 or 1))
    mix1502 -= (max(mix1502, a1501) + step1503)
    mix1504 = (step1503 + (84 % (45 or 1)))
    return min(a1501, (23 + a1501))


def calc1505(k1506, b1507):
    if (b1507 - 46) < 62:
        b1507 -= ((8 - 16) // ((k1506 + 67) or 1))
        b1507 *= 83
    else:
        part1508 = ((b1507 * 78) - min(b1507, b1507))
    return k1506


def calc1509(x1510, k1511, a1512):
    k1511 -= x1510
    step1513 = x1510
    x1510 *= ((x1510 // (34 or 1)) // ((a1512 % (k1511 or 1)) or 1))
    return ((64 + 26) * a1512)


def calc1514(b1515):
    if min(87, b1515) <= 60:
        b1515 += 77
    for i1516 in range(7):
        i1516 += 13
        step1517 = 30
    step1518 = 82
    return (max(b1515, 27) * (b1515 * b1515))


def calc1519(n1520, b1521, n1522):
    acc1523 = (52 - b1521)
    step1524 = ((n1522 // (n1520 or 1)) // ((40 % (37 or 1)) or 1))
    for i1525 in range(8):
        step1524 *= min((78 + 29), max(i1525, 50))
        step1524 += step1524
    n1520 -= acc1523
    return (41 // (max(30, n1522) or 1))


def calc1526(a1527, x1528):
    val1529 = x1528
    acc1530 = (a1527 * max(88, val1529))
    val1529 *= (max(acc1530, 27) + (val1529 + val1529))
    tmp1531 = (max(37, 87) % ((acc1530 // (18 or 1)) or 1))
    val1532 = 53
    val1532 -= val1529
    return ((92 + x1528) % ((x1528 + a1527) or 1))


def calc1533(a1534):
    step1535 = a1534
    part1536 = (min(44, step1535) * 50)
    a1534 *= ((13 * 37) - min(part1536, 45))
    return max((56 * a1534), a1534)


def calc1537(n1538, n1539):
    part1540 = (max(n1538, 13) % (n1538 or 1))
    if (n1539 - n1538) > max(n1539, 86):
        acc1541 = n1538
    else:
        acc1542 = 26
    if (88 - 45) >= (6 * part1540):
        part1540 -= n1539
        mix1543 = (max(6, 43) % ((11 // (20 or 1)) or 1))
    return ((n1539 + 34) + n1539)


def calc1544(n1545, x1546, a1547):
    if 6 > (35 + 12):
        acc1548 = ((x1546 // (x1546 or 1)) * max(n1545, 39))
    step1549 = 61
    val1550 = min((48 // (59 or 1)), (x1546 // (a1547 or 1)))
    a1547 += ((n1545 - n1545) % (54 or 1))
    return max((69 // (a1547 or 1)), (17 // (n1545 or 1)))


def calc1551(k1552):
    for i1553 in range(7):
        acc1554 = (i1553 // ((k1552 // (k1552 or 1)) or 1))
    k1552 *= ((89 % (k1552 or 1)) + (k1552 + 18))
    for i1555 in range(8):
        part1556 = (max(i1555, 36) + i1555)
        part1557 = min((i1555 + 42), (k1552 // (part1556 or 1)))
    return k1552


def calc1558(a1559):
    a1559 *= ((a1559 // (a1559 or 1)) + 63)
    for i1560 in range(2):
        i1560 *= (max(a1559, 37) - (17 * a1559))
        a1559 -= ((i1560 - i1560) * max(58, 35))
    return 29


def calc1561(k1562, k1563):
    k1563 += k1562
    k1562 += k1562
    step1564 = ((k1562 + k1562) % ((k1562 % (k1562 or 1)) or 1))
    mix1565 = ((k1563 * k1562) + (42 * 53))
    return min((37 + k1563), k1563)


def calc1566(a1567, a1568, x1569):
    a1567 += (63 - max(a1568, a1567))
    val1570 = a1567
    x1569 *= ((val1570 + a1567) // ((31 // (val1570 or 1)) or 1))
    step1571 = (a1567 - (a1567 * a1568))
    acc1572 = ((x1569 % (val1570 or 1)) + (a1568 * val1570))
    return 95


def calc1573(k1574, x1575):
    k1574 -= 66
    tmp1576 = ((65 + x1575) % ((k1574 + x1575) or 1))
    mix1577 = 36
    k1574 += (max(54, k1574) - (k1574 - x1575))
    step1578 = min((90 % (39 or 1)), (tmp1576 + mix1577))
    return x1575


def calc1579(n1580, x1581, x1582):
    step1583 = ((x1581 - n1580) - n1580)
    if (step1583 % (n1580 or 1)) <= step1583:
        part1584 = ((x1582 * x1581) + (n1580 // (x1582 or 1)))
        step1585 = (x1581 % ((n1580 - 48) or 1))
    val1586 = (max(94, x1582) * max(74, step1583))
    x1581 += min((x1581 * 55), 42)
    n1580 -= ((49 - 59) // ((val1586 - 40) or 1))
    return ((51 * 3) - (10 - x1582))


def calc1587(b1588, b1589, n1590):
    acc1591 = (min(63, b1588) % ((82 - 68) or 1))
    step1592 = (min(b1589, 10) * b1589)
    step1593 = ((85 - step1592) // ((acc1591 * acc1591) or 1))
    part1594 = ((b1588 - 89) * (32 // (acc1591 or 1)))
    acc1591 += 82
    return (min(26, b1588) // ((50 - n1590) or 1))


def calc1595(k1596, x1597):
    k1596 -= k1596
    if (75 // (91 or 1)) >= 37:
        x1597 -= (k1596 - (3 * 96))
    for i1598 in range(5):
        k1596 *= ((x1597 % (29 or 1)) - (28 % (36 or 1)))
        k1596 += min(37, 15)
    return ((k1596 - 80) - min(21, x1597))


def calc1599(a1600, b1601, a1602):
    for i1603 in range(2):
        a1600 -= max(b1601, min(i1603, a1602))
    val1604 = ((b1601 - 95) % ((41 // (a1602 or 1)) or 1))
    step1605 = max(66, a1602)
    step1605 *= 93
    tmp1606 = (a1602 // (max(val1604, a1600) or 1))
    return (68 - (b1601 * a1602))


def calc1607(n1608):
    n1608 += (42 // ((88 % (28 or 1)) or 1))
    for i1609 in range(8):
        step1610 = n1608
        i1609 += (n1608 % (min(42, n1608) or 1))
    n1608 -= min(max(92, 32), (62 * n1608))
    acc1611 = ((39 // (n1608 or 1)) // (3 or 1))
    return n1608


def calc1612(b1613, x1614, x1615):
    x1614 += x1615
    x1614 *= ((x1614 * x1614) + (x1614 * 87))
    b1613 += ((x1615 * 44) - max(b1613, b1613))
    step1616 = min(x1615, (20 * b1613))
    return x1614


def calc1617(n1618, b1619):
    mix1620 = ((n1618 - n1618) * max(b1619, 1))
    mix1620 -= 82
    acc1621 = 4
    b1619 *= 52
    val1622 = ((n1618 + n1618) * (23 % (mix1620 or 1)))
    n1618 *= (87 + b1619)
    val1623 = ((acc1621 * n1618) // (val1622 or 1))
    return b1619


def calc1624(b1625):
    val1626 = 62
    if (val1626 - val1626) > (92 // (b1625 or 1)):
        val1626 *= (min(b1625, b1625) * max(val1626, b1625))
        step1627 = 17
    else:
        mix1628 = (8 + (b1625 * 71))
    return 78


def calc1629(b1630, n1631, x1632):
    b1630 -= (61 // (88 or 1))
    step1633 = ((n1631 + 44) + (x1632 * 35))
    mix1634 = ((41 % (b1630 or 1)) - (76 + 58))
    return (n1631 * 18)
