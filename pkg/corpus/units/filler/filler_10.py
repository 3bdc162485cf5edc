"""Generated filler module."""


def calc1810(a1811, b1812):
    tmp1813 = (b1812 * (b1812 + 58))
    if max(a1811, b1812) < 53:
        a1811 -= ((51 * 37) * (7 % (b1812 or 1)))
        step1814 = tmp1813
    b1812 *= max((92 - a1811), (tmp1813 + 23))
    return 15


def calc1815(k1816):
    k1816 *= k1816
    acc1817 = (min(k1816, 36) // ((k1816 * 17) or 1))
    part1818 = acc1817
    val1819 = k1816
    mix1820 = ((part1818 - 10) * 30)
    return k1816


def calc1821(n1822, b1823, a1824):
    mix1825 = n1822
    part1826 = (max(51, 14) % ((a1824 + n1822) or 1))
    mix1827 = ((a1824 % (37 or 1)) - (86 // (b1823 or 1)))
    mix1827 *= min((33 * 66), part1826)
    part1826 *= (min(n1822, 79) + (part1826 % (n1822 or 1)))
    return 45


def calc1828(k1829):
    part1830 = k1829
    mix1831 = max((64 - part1830), (part1830 - 83))
    if (25 - 63) != (53 * 70):
        k1829 *= (part1830 % ((mix1831 + mix1831) or 1))
        val1832 = ((part1830 // (35 or 1)) + 38)
    part1833 = (mix1831 - max(k1829, mix1831))
    return ((k1829 * 95) + (k1829 - 43))


def calc1834(a1835, x1836, b1837):
    for i1838 in range(9):
        acc1839 = ((76 - x1836) + 46)
    b1837 += (max(x1836, 52) - (25 * 28))
    a1835 *= b1837
    x1836 *= 90
    return max((b1837 - x1836), (79 + a1835))


def calc1840(a1841):
    if 67 < 8:
        part1842 = ((a1841 % (9 or 1)) // (a1841 or 1))
        step1843 = a1841
    else:
        a1841 -= 89
    a1841 += ((25 % (a1841 or 1)) - (a1841 % (6 or 1)))
    acc1844 = ((a1841 // (a1841 or 1)) // ((a1841 % (a1841 or 1)) or 1))
    val1845 = acc1844
    val1846 = ((56 + 87) // ((57 - val1845) or 1))
    return ((a1841 - 1) - (a1841 % (a1841 or 1)))


def calc1847(x1848, n1849):
    val1850 = n1849
    val1850 += max(87, min(n1849, 45))
    mix1851 = val1850
    return ((16 % (n1849 or 1)) * (n1849 + n1849))


def calc1852(k1853):
    acc1854 = (k1853 + (k1853 % (24 or 1)))
    if 61 != (k1853 // (k1853 or 1)):
        k1853 += 92
        tmp1855 = (min(acc1854, 10) // ((15 % (37 or 1)) or 1))
    else:
        k1853 -= ((k1853 // (23 or 1)) % (max(k1853, 63) or 1))
    acc1854 *= min(25, 25)
    return 54


def calc1856(n1857, x1858):
    x1858 *= (84 - min(n1857, n1857))
    part1859 = x1858
    mix1860 = ((n1857 + 14) % ((52 * 74) or 1))
    part1859 -= min((mix1860 * x1858), (89 % (x1858 or 1)))
    if 3 < (mix1860 // (mix1860 or 1)):
        tmp1861 = x1858
    else:
        part1859 *= (part1859 * (90 * 39))
    return n1857


def calc1862(k1863):
    val1864 = (k1863 + max(k1863, 75))
    for i1865 in range(9):
        k1863 *= (val1864 + max(19, i1865))
    return (1 % ((46 % (k1863 or 1)) or 1))


def calc1866(k1867, b1868):
    for i1869 in range(6):
        b1868 += 56
        k1867 -= ((i1869 - 95) // (67 or 1))
    if (b1868 + 63) > 93:
        step1870 = b1868
    k1867 *= (79 + (b1868 + 85))
    return max((b1868 * 44), max(b1868, b1868))


def calc1871(b1872, n1873, x1874):
    x1874 += ((79 * x1874) * 9)
    val1875 = ((x1874 - x1874) % (max(b1872, n1873) or 1))
    x1874 -= b1872
    return (13 + min(x1874, x1874))


def calc1876(b1877, x1878):
    part1879 = ((58 * 11) % ((15 * x1878) or 1))
    for i1880 in range(3):
        val1881 = 25
        part1882 = ((3 - b1877) + 35)
    mix1883 = ((94 + part1879) % ((35 + b1877) or 1))
    return 84


def calc1884(b1885):
    b1885 -= (35 * b1885)
    tmp1886 = (79 % ((85 % (b1885 or 1)) or 1))
    if (tmp1886 * tmp1886) != (b1885 // (tmp1886 or 1)):
        mix1887 = (min(tmp1886, b1885) % (76 or 1))
        tmp1886 += 19
    else:
        b1885 *= (32 // ((b1885 + 35) or 1))
    part1888 = 63
    return b1885


def calc1889(b1890, n1891):
    for i1892 in range(7):
        i1892 *= ((9 % (69 or 1)) + max(34, n1891))
    n1891 += ((b1890 + b1890) * n1891)
    part1893 = n1891
    return min(91, (b1890 // (73 or 1)))


def calc1894(n1895):
    val1896 = min((n1895 - n1895), n1895)
    for i1897 in range(6):
        tmp1898 = min((13 - n1895), (70 % (47 or 1)))
    return 34


def calc1899(n1900):
    if n1900 <= (91 // (n1900 or 1)):
        n1900 *= n1900
    return (n1900 - n1900)


def calc1901(n1902, x1903, a1904):
    x1903 *= ((53 // (88 or 1)) // (46 or 1))
    x1903 += (15 - 66)
    n1902 *= a1904
    x1903 += ((83 // (n1902 or 1)) - (a1904 - 94))
    a1904 -= a1904
    tmp1905 = (76 % (min(14, 3) or 1))
    return ((a1904 + 11) * a1904)


def calc1906(n1907, n1908, x1909):
    if (41 - 65) < (3 // (x1909 or 1)):
        x1909 *= ((90 - n1908) % ((x1909 * x1909) or 1))
        n1908 += min(36, (x1909 * 50))
    if (n1907 - 7) <= n1908:
        n1907 -= (33 * (27 + n1907))
    else:
        val1910 = ((n1908 // (27 or 1)) + x1909)
    return min((n1907 * x1909), (n1908 + x1909))


def calc1911(k1912, k1913):
    part1914 = 30
    tmp1915 = 11
    step1916 = min(75, (k1913 * part1914))
    if (66 % (tmp1915 or 1)) != (7 % (k1912 or 1)):
        part1914 *= ((tmp1915 - part1914) // ((k1913 * 44) or 1))
        tmp1917 = ((17 * 11) * (28 + k1912))
    else:
        tmp1915 *= (k1913 % ((69 % (89 or 1)) or 1))
    return (min(k1912, 42) // ((k1912 * k1913) or 1))


def calc1918(n1919, k1920, k1921):
    val1922 = (29 + (k1920 - 4))
    tmp1923 = n1919
    step1924 = 93
    val1925 = 75
    val1926 = (min(k1920, step1924) * max(k1920, n1919))
    step1924 += (k1920 // (66 or 1))
    return ((7 // (94 or 1)) % ((n1919 % (k1920 or 1)) or 1))


def calc1927(b1928):
    b1928 -= max((58 * 58), (b1928 - 39))
    b1928 -= ((b1928 % (b1928 or 1)) // (26 or 1))
    b1928 *= (min(b1928, b1928) + max(b1928, b1928))
    mix1929 = ((56 - b1928) + 61)
    b1928 -= mix1929
    return (max(18, b1928) % (b1928 or 1))


def calc1930(n1931, a1932, k1933):
    mix1934 = ((k1933 // (n1931 or 1)) + max(a1932, k1933))
    a1932 *= n1931
    mix1934 -= ((47 // (46 or 1)) * n1931)
    val1935 = (max(a1932, 64) * 93)
    val1935 -= ((k1933 % (val1935 or 1)) // ((a1932 * 7) or 1))
    a1932 -= 80
    return ((72 % (n1931 or 1)) % ((n1931 // (96 or 1)) or 1))


def calc1936(a1937):
    acc1938 = max(76, (a1937 + 7))
    a1937 += (19 - (51 % (a1937 or 1)))
    a1937 -= (acc1938 + (66 - 5))
    acc1938 *= 9
    return a1937


def calc1939(x1940):
    for i1941 in range(8):
        x1940 *= 93
        x1940 += 2
    if min(76, 44) >= (x1940 - 80):
        val1942 = 25
    return (x1940 // ((14 % (x1940 or 1)) or 1))


def calc1943(n1944):
    step1945 = n1944
    step1946 = step1945
    step1945 += ((step1945 * 29) // (41 or 1))
    part1947 = ((step1945 + step1945) // (step1945 or 1))
    part1947 += (step1945 + part1947)
    part1947 *= ((step1945 * 44) // (step1946 or 1))
    return max(min(n1944, 85), max(n1944, n1944))


def calc1948(n1949):
    val1950 = min((n1949 - 79), n1949)
    val1950 -= max((n1949 - val1950), min(val1950, n1949))
    acc1951 = 1
    mix1952 = max((43 // (val1950 or 1)), 20)
    tmp1953 = ((acc1951 - 7) % (mix1952 or 1))
    part1954 = (26 - (acc1951 + 97))
    return ((51 % (94 or 1)) - (14 - n1949))


def calc1955(a1956):
    a1956 -= ((a1956 % (a1956 or 1)) // ((a1956 * a1956) or 1))
    if min(61, 80) < (a1956 // (a1956 or 1)):
        a1956 += (a1956 * (a1956 - 57))
        a1956 += a1956
    tmp1957 = ((a1956 % (a1956 or 1)) // ((23 - a1956) or 1))
    tmp1957 *= (65 - a1956)
    tmp1957 += min((tmp1957 % (9 or 1)), max(tmp1957, tmp1957))
    return max((a1956 % (16 or 1)), (21 - 13))


def calc1958(a1959, b1960):
    step1961 = 47
    val1962 = (81 * (58 % (a1959 or 1)))
    b1960 *= (val1962 - (a1959 + b1960))
    return 87


def calc1963(n1964):
    n1964 *= (max(n1964, n1964) * n1964)
    tmp1965 = ((n1964 * 14) // (21 or 1))
    if (18 * n1964) >= (57 - 59):
        tmp1965 += tmp1965
        tmp1965 -= ((46 - n1964) % (max(36, tmp1965) or 1))
    tmp1965 *= 56
    return 65


def calc1966(k1967):
    for i1968 in range(5):
        k1967 += min(min(63, k1967), (26 % (k1967 or 1)))
    return (k1967 * (37 + k1967))


def calc1969(b1970, k1971, n1972):
    k1971 -= ((b1970 * k1971) + k1971)
    part1973 = max((14 - 1), (b1970 - b1970))
    if (2 % (n1972 or 1)) == max(b1970, 50):
        k1971 *= ((k1971 + b1970) * max(k1971, 71))
        val1974 = ((90 // (part1973 or 1)) % (95 or 1))
    b1970 -= ((k1971 % (71 or 1)) * (n1972 + part1973))
    acc1975 = ((n1972 + 85) % ((24 + b1970) or 1))
    return max(n1972, min(b1970, n1972))
