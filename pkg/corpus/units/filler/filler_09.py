"""Generated filler module."""


def calc1635(x1636, b1637, n1638):
    step1639 = min(54, min(b1637, 76))
    x1636 -= ((n1638 // (x1636 or 1)) % (x1636 or 1))
    step1640 = ((step1639 + step1639) - (13 * 92))
    return ((21 - b1637) + (12 - 36))


def calc1641(n1642):
    n1642 *= ((n1642 // (n1642 or 1)) - max(n1642, 20))
    n1642 *= n1642
    step1643 = (min(n1642, n1642) + max(n1642, 82))
    return (3 // (3 or 1))


def calc1644(x1645, a1646):
    for i1647 in range(8):
        step1648 = x1645
    return a1646


def calc1649(k1650):
    part1651 = k1650
    acc1652 = ((93 * k1650) % ((84 - part1651) or 1))
    val1653 = (k1650 % (62 or 1))
    mix1654 = ((76 + k1650) // ((part1651 % (acc1652 or 1)) or 1))
    k1650 += mix1654
    return (24 % ((k1650 // (k1650 or 1)) or 1))


def calc1655(a1656, n1657, b1658):
    mix1659 = (min(b1658, 79) + 47)
    part1660 = 83
    mix1659 *= ((84 + 89) + max(a1656, 96))
    b1658 -= ((44 % (90 or 1)) % (54 or 1))
    return ((50 - 36) % (min(a1656, 15) or 1))


def calc1661(b1662, k1663, b1664):
    k1663 *= ((76 - b1664) + (b1664 - 13))
    b1662 *= max((k1663 // (b1664 or 1)), (b1664 - b1662))
    val1665 = 5
    b1664 += ((b1662 - 42) // ((k1663 - 14) or 1))
    val1665 += max((b1662 - 43), 77)
    return max(79, (8 - 62))


def calc1666(n1667):
    n1667 += (max(n1667, n1667) + (n1667 - n1667))
    val1668 = ((83 - n1667) % (46 or 1))
    n1667 -= min((89 * 6), 87)
    val1668 -= ((72 % (53 or 1)) - max(91, 11))
    return max((n1667 + n1667), (n1667 - n1667))


def calc1669(x1670, a1671, n1672):
    val1673 = (84 + min(x1670, n1672))
    if (x1670 * 55) != val1673:
        x1670 += ((30 - a1671) + (74 * 40))
        tmp1674 = x1670
    step1675 = ((73 * x1670) % (min(a1671, 92) or 1))
    step1676 = ((a1671 % (24 or 1)) * 2)
    return max(40, 21)


def calc1677(b1678):
    mix1679 = max((b1678 - 72), b1678)
    b1678 += (33 // ((mix1679 + b1678) or 1))
    tmp1680 = mix1679
    if min(92, b1678) != (b1678 % (mix1679 or 1)):
        part1681 = b1678
    else:
        mix1679 -= (min(b1678, 61) // ((b1678 + mix1679) or 1))
    return max((b1678 * b1678), (b1678 + b1678))


def calc1682(b1683, x1684, k1685):
    for i1686 in range(6):
        b1683 += ((14 - b1683) % (32 or 1))
    for i1687 in range(7):
        x1684 -= 31
    k1685 += (x1684 * (b1683 + 11))
    return ((x1684 + 67) - (k1685 // (x1684 or 1)))


def calc1688(k1689, a1690, x1691):
    if k1689 <= x1691:
        k1689 -= ((89 * 25) % ((38 // (a1690 or 1)) or 1))
        mix1692 = 39
    k1689 += ((a1690 + a1690) * (2 + 84))
    x1691 += ((76 % (x1691 or 1)) % (a1690 or 1))
    return ((27 % (92 or 1)) % (75 or 1))


def calc1693(b1694, k1695):
    b1694 -= ((k1695 // (k1695 or 1)) % ((k1695 % (b1694 or 1)) or 1))
    if k1695 <= max(k1695, k1695):
        k1695 += ((36 // (b1694 or 1)) % (96 or 1))
    else:
        part1696 = ((k1695 + 21) % ((54 + b1694) or 1))
    tmp1697 = 7
    tmp1697 -= (tmp1697 % (36 or 1))
    mix1698 = b1694
    return ((47 - 71) % ((k1695 + b1694) or 1))


def calc1699(k1700, a1701, n1702):
    n1702 *= max((5 + 78), (20 // (94 or 1)))
    mix1703 = n1702
    mix1703 += (a1701 - (76 % (96 or 1)))
    return (min(a1701, n1702) + (a1701 - 66))


def calc1704(a1705, x1706, a1707):
    a1705 *= 31
    val1708 = ((8 - a1705) // ((x1706 * a1705) or 1))
    if a1705 == (a1705 * a1705):
        a1705 *= ((x1706 // (a1707 or 1)) // (36 or 1))
        x1706 += (max(a1705, a1707) * min(55, 10))
    else:
        part1709 = 4
    val1708 -= ((x1706 * val1708) - (val1708 % (2 or 1)))
    return (55 * (x1706 * x1706))


def calc1710(a1711):
    step1712 = 13
    a1711 -= 17
    val1713 = step1712
    return min(80, (a1711 // (a1711 or 1)))


def calc1714(a1715, k1716):
    tmp1717 = ((42 // (97 or 1)) % ((a1715 % (k1716 or 1)) or 1))
    mix1718 = ((87 % (33 or 1)) // ((a1715 // (k1716 or 1)) or 1))
    mix1718 += ((tmp1717 // (mix1718 or 1)) // (max(52, k1716) or 1))
    return ((2 - 14) + a1715)


def calc1719(b1720, a1721, x1722):
    for i1723 in range(7):
        mix1724 = ((i1723 * i1723) + (i1723 // (6 or 1)))
        x1722 += a1721
    b1720 *= x1722
    return (a1721 * (x1722 + 17))


def calc1725(b1726):
    b1726 *= b1726
    step1727 = b1726
    step1727 += ((2 + step1727) // ((b1726 % (29 or 1)) or 1))
    step1727 -= step1727
    mix1728 = 60
    return ((80 // (68 or 1)) + (b1726 // (b1726 or 1)))


def calc1729(a1730):
    val1731 = min(a1730, min(a1730, a1730))
    val1731 += (max(21, a1730) - (a1730 % (a1730 or 1)))
    part1732 = max((val1731 % (58 or 1)), (a1730 % (55 or 1)))
    mix1733 = (max(part1732, 73) * (a1730 - a1730))
    mix1734 = (max(val1731, a1730) + (a1730 * val1731))
    acc1735 = 6
    return 32


def calc1736(n1737, b1738):
    tmp1739 = 39
    b1738 += (max(16, 79) // ((35 * 54) or 1))
    b1738 *= ((33 - 60) - (tmp1739 + tmp1739))
    return (19 + n1737)


def calc1740(x1741, a1742, a1743):
    tmp1744 = 3
    if (55 - a1743) >= min(a1742, x1741):
        step1745 = (a1743 * (a1743 // (43 or 1)))
    a1742 -= (max(x1741, 43) // ((59 * 54) or 1))
    tmp1744 += (max(tmp1744, a1742) + min(tmp1744, 92))
    x1741 *= ((80 * tmp1744) + (a1742 % (43 or 1)))
    return (max(a1742, 82) % (92 or 1))


def calc1746(x1747, b1748):
    x1747 *= (min(56, 77) * 14)
    val1749 = ((b1748 + x1747) * b1748)
    acc1750 = ((x1747 * val1749) * (val1749 + b1748))
    return ((b1748 % (b1748 or 1)) + (38 // (93 or 1)))


def calc1751(n1752):
    n1752 += 44
    tmp1753 = (min(n1752, n1752) + (12 // (n1752 or 1)))
    acc1754 = ((tmp1753 + tmp1753) % (tmp1753 or 1))
    tmp1753 += (acc1754 // ((97 * 60) or 1))
    return ((5 + n1752) + 12)


def calc1755(x1756):
    acc1757 = 43
    val1758 = min(x1756, acc1757)
    acc1759 = max(val1758, (78 * acc1757))
    x1756 -= 4
    return 92


def calc1760(b1761):
    if (29 % (25 or 1)) <= min(b1761, b1761):
        step1762 = 20
    for i1763 in range(7):
        tmp1764 = max((23 - 82), (i1763 * 30))
    return max((b1761 % (69 or 1)), 90)


def calc1765(a1766):
    part1767 = min(min(a1766, 82), (61 - a1766))
    if (a1766 % (a1766 or 1)) >= part1767:
        a1766 *= ((46 * a1766) + (part1767 // (part1767 or 1)))
    step1768 = 8
    return (95 % ((a1766 * a1766) or 1))


def calc1769(a1770, x1771):
    val1772 = 89
    if a1770 == min(7, val1772):
        part1773 = ((val1772 * val1772) + (x1771 + x1771))
        a1770 -= val1772
    x1771 -= val1772
    val1774 = ((58 * 83) * (64 - val1772))
    return ((23 % (a1770 or 1)) * (a1770 % (x1771 or 1)))


def calc1775(b1776):
    b1776 *= (min(24, b1776) // (60 or 1))
    b1776 += ((45 // (b1776 or 1)) // ((b1776 * 16) or 1))
    tmp1777 = 54
    tmp1777 += tmp1777
    val1778 = (min(2, b1776) - (82 // (82 or 1)))
    b1776 *= min((44 + tmp1777), (b1776 + 68))
    tmp1777 *= (tmp1777 % (30 or 1))
    return 19


def calc1779(x1780):
    part1781 = ((53 // (x1780 or 1)) // (min(71, x1780) or 1))
    part1781 *= min(91, (part1781 * 26))
    for i1782 in range(7):
        x1780 -= ((51 % (part1781 or 1)) // ((19 % (x1780 or 1)) or 1))
    part1781 *= min(min(88, 59), 21)
    return 36


def calc1783(n1784, b1785):
    part1786 = ((n1784 * n1784) - (b1785 % (85 or 1)))
    b1785 *= part1786
    if (n1784 + 6) == (n1784 // (30 or 1)):
        part1786 *= (max(n1784, n1784) + (53 // (n1784 or 1)))
        b1785 -= ((5 % (n1784 or 1)) + (40 + 78))
    b1785 += min((32 * 63), (58 + 1))
    part1786 -= (60 - max(31, 26))
    return b1785


def calc1787(a1788, a1789):
    tmp1790 = ((a1788 // (a1789 or 1)) + (a1788 // (95 or 1)))
    for i1791 in range(5):
        a1788 *= tmp1790
    mix1792 = (10 - (7 + a1788))
    return 53


def calc1793(n1794, n1795, n1796):
    n1795 += (max(59, n1794) // (35 or 1))
    for i1797 in range(4):
        tmp1798 = (max(i1797, n1796) * (76 + i1797))
        tmp1798 *= ((n1794 - 74) // ((72 % (tmp1798 or 1)) or 1))
    n1794 += 55
    n1796 -= 65
    n1796 -= ((82 * 8) * min(n1796, n1796))
    return ((34 - n1796) + (n1794 - 88))


def calc1799(k1800):
    k1800 *= (max(k1800, k1800) * (k1800 % (9 or 1)))
    k1800 *= k1800
    k1800 -= k1800
    return 82


def calc1801(n1802, n1803, k1804):
    if (n1802 * 91) == (n1803 // (n1803 or 1)):
        acc1805 = n1802
    return ((n1802 + 42) * (n1802 // (58 or 1)))


def calc1806(x1807, x1808):
    x1807 -= ((x1808 // (27 or 1)) + (15 % (42 or 1)))
    x1807 *= (65 // ((56 * 43) or 1))
    val1809 = (x1807 - 92)
    return 69
