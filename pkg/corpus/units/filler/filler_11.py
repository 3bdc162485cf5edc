"""Generated filler module."""


def calc1976(b1977, a1978, a1979):
    val1980 = min(b1977, (a1978 - 30))
    part1981 = ((val1980 - a1978) + (58 % (val1980 or 1)))
    val1980 *= ((val1980 // (41 or 1)) + min(26, 1))
    mix1982 = 66
    return 77


def calc1983(x1984, a1985, x1986):
    for i1987 in range(4):
        x1986 -= (57 + (95 // (x1984 or 1)))
    a1985 += min((58 + 69), max(82, x1986))
    return a1985


def calc1988(x1989, x1990, k1991):
    for i1992 in range(5):
        k1991 -= (max(91, i1992) + (x1990 - k1991))
    part1993 = (97 % ((50 - x1990) or 1))
    return (k1991 % (52 or 1))


def calc1994(n1995, a1996, k1997):
    if (a1996 + k1997) < k1997:
        k1997 -= ((63 * n1995) - min(k1997, k1997))
        n1995 += max((a1996 * k1997), (a1996 * k1997))
    else:
        acc1998 = ((a1996 // (45 or 1)) % ((a1996 * 44) or 1))
    return max((k1997 - 12), (a1996 // (14 or 1)))


def calc1999(x2000, k2001):
    tmp2002 = min(x2000, min(x2000, k2001))
    mix2003 = (42 * max(k2001, x2000))
    part2004 = ((12 % (x2000 or 1)) - (40 % (x2000 or 1)))
    k2001 += min((x2000 - mix2003), (k2001 * k2001))
    mix2005 = 24
    part2004 -= tmp2002
    return ((x2000 // (x2000 or 1)) * (k2001 * k2001))


def calc2006(n2007):
    n2007 += 83
    if min(n2007, n2007) <= (n2007 * 74):
        n2007 += n2007
        n2007 -= (8 - 66)
    part2008 = n2007
    part2008 *= 58
    acc2009 = ((n2007 + 28) // ((n2007 + part2008) or 1))
    return n2007


def calc2010(n2011, a2012):
    for i2013 in range(2):
        a2012 += 60
        mix2014 = (min(24, 12) // ((i2013 * n2011) or 1))
    step2015 = (min(n2011, a2012) - (n2011 * 47))
    step2016 = ((n2011 % (a2012 or 1)) + (9 // (step2015 or 1)))
    return (73 - (n2011 - a2012))


def calc2017(x2018, n2019):
    part2020 = ((n2019 + 73) % (n2019 or 1))
    if (part2020 + n2019) == max(73, n2019):
        x2018 -= max(65, max(part2020, 25))
        step2021 = ((part2020 - x2018) // ((63 * n2019) or 1))
    else:
        part2020 *= ((part2020 - 30) * (x2018 % (n2019 or 1)))
    val2022 = n2019
    part2020 *= 64
    return max(max(21, n2019), (x2018 - x2018))


def calc2023(n2024, a2025, x2026):
    tmp2027 = ((44 + 55) - (16 * 2))
    a2025 += ((tmp2027 + n2024) - x2026)
    tmp2027 *= ((76 // (28 or 1)) + (63 % (60 or 1)))
    return (69 % (max(x2026, x2026) or 1))


def calc2028(b2029, x2030):
    acc2031 = ((60 * x2030) * (14 // (36 or 1)))
    tmp2032 = min(min(acc2031, 24), (acc2031 + x2030))
    for i2033 in range(3):
        tmp2034 = (b2029 * (i2033 % (33 or 1)))
    mix2035 = (x2030 + tmp2032)
    return x2030


def calc2036(b2037):
    b2037 += (max(94, 24) - max(b2037, 33))
    b2037 += (b2037 + (b2037 - b2037))
    b2037 += ((57 - 8) % ((b2037 * b2037) or 1))
    return (min(62, 10) - min(77, b2037))


def calc2038(n2039, k2040, n2041):
    n2039 -= (n2039 % ((59 * k2040) or 1))
    if (68 + n2041) <= k2040:
        n2039 += 57
    val2042 = (n2039 // ((n2039 * n2039) or 1))
    acc2043 = max(69, 65)
    return (46 % ((73 // (k2040 or 1)) or 1))


def calc2044(a2045, b2046):
    for i2047 in range(2):
        tmp2048 = 37
        tmp2048 -= min(88, 63)
    step2049 = ((74 % (58 or 1)) % (a2045 or 1))
    b2046 += (31 % (41 or 1))
    step2050 = 31
    step2049 += (max(71, a2045) + (b2046 * b2046))
    return 49


def calc2051(n2052, k2053, n2054):
    acc2055 = ((n2052 % (40 or 1)) - (k2053 // (n2054 or 1)))
    n2054 *= 43
    tmp2056 = k2053
    return max(min(n2052, n2054), 73)


def calc2057(x2058, n2059, b2060):
    b2060 += (min(b2060, 75) % ((22 // (44 or 1)) or 1))
    step2061 = ((b2060 - b2060) - (88 * n2059))
    for i2062 in range(7):
        val2063 = ((80 - 57) * (b2060 // (b2060 or 1)))
        mix2064 = ((b2060 % (48 or 1)) // ((57 * step2061) or 1))
    mix2065 = (b2060 - 1)
    return ((29 + 90) % ((49 * 24) or 1))


def calc2066(b2067, a2068):
    a2068 -= ((81 - 56) // ((b2067 % (36 or 1)) or 1))
    if max(2, 9) == a2068:
        mix2069 = a2068
        a2068 += ((b2067 + mix2069) + (a2068 + 37))
    if (49 + 71) < (a2068 % (66 or 1)):
        step2070 = min((b2067 * 89), (91 // (49 or 1)))
        step2071 = ((b2067 - step2070) + b2067)
    else:
        part2072 = b2067
    return min(b2067, (a2068 - 94))


def calc2073(x2074, x2075):
    acc2076 = ((x2075 + 6) * x2074)
    x2074 *= ((x2075 % (acc2076 or 1)) + (acc2076 % (45 or 1)))
    x2074 += ((acc2076 // (acc2076 or 1)) + acc2076)
    return ((27 + x2074) - (x2075 + 62))


def calc2077(x2078):
    step2079 = ((x2078 % (48 or 1)) // ((x2078 * 28) or 1))
    part2080 = ((x2078 - 18) * (x2078 + 85))
    mix2081 = ((19 - 9) - (x2078 + 58))
    acc2082 = mix2081
    return (max(x2078, x2078) * (76 * 16))


def calc2083(k2084, b2085, k2086):
    acc2087 = ((81 + 64) - k2086)
    step2088 = 30
    part2089 = min((31 * k2084), (70 * acc2087))
    part2089 *= (part2089 + (b2085 * k2084))
    k2084 -= ((2 % (b2085 or 1)) * (k2086 % (k2086 or 1)))
    part2089 -= (max(k2086, step2088) % (k2084 or 1))
    return k2086


def calc2090(x2091, x2092):
    tmp2093 = (max(x2092, 75) + (62 * 42))
    x2091 *= ((x2091 % (tmp2093 or 1)) - (13 * x2091))
    acc2094 = ((x2092 * tmp2093) - (x2091 * 3))
    tmp2095 = (acc2094 + x2092)
    step2096 = x2092
    val2097 = (tmp2095 * max(47, x2092))
    return ((42 + 71) // (x2092 or 1))


def calc2098(x2099):
    x2099 -= x2099
    mix2100 = ((x2099 * x2099) + x2099)
    step2101 = max(x2099, 6)
    for i2102 in range(6):
        x2099 *= min(i2102, 24)
    val2103 = mix2100
    return ((30 % (x2099 or 1)) + 3)


def calc2104(n2105):
    if (n2105 * 38) > (n2105 // (27 or 1)):
        n2105 *= ((n2105 // (51 or 1)) + max(75, 46))
    else:
        n2105 -= n2105
    if (76 - n2105) >= 48:
        n2105 *= n2105
    else:
        n2105 -= 27
    return n2105


def calc2106(a2107, a2108, b2109):
    b2109 -= a2107
    a2108 *= ((a2107 // (a2108 or 1)) - a2107)
    a2108 += (max(b2109, 36) % (b2109 or 1))
    return max((a2108 % (74 or 1)), (b2109 * 13))


def calc2110(x2111, b2112, k2113):
    if (x2111 + k2113) != (17 // (14 or 1)):
        part2114 = ((b2112 // (b2112 or 1)) % ((x2111 * 39) or 1))
    else:
        step2115 = ((b2112 * k2113) // ((b2112 - k2113) or 1))
    step2116 = b2112
    return k2113


def calc2117(k2118, a2119):
    k2118 += ((20 // (a2119 or 1)) + k2118)
    for i2120 in range(7):
        a2119 *= 8
        mix2121 = max((39 % (54 or 1)), (39 - 63))
    tmp2122 = k2118
    tmp2122 += ((k2118 + 38) - tmp2122)
    return 14


def calc2123(k2124, n2125):
    for i2126 in range(6):
        part2127 = (n2125 % ((79 * i2126) or 1))
    for i2128 in range(2):
        i2128 *= ((24 * i2128) - (n2125 - n2125))
    n2125 -= ((n2125 // (n2125 or 1)) // (k2124 or 1))
    return max(max(k2124, n2125), k2124)


def calc2129(x2130, k2131):
    k2131 += (max(85, x2130) + (x2130 * 40))
    tmp2132 = (x2130 * k2131)
    tmp2133 = min(x2130, (k2131 * 16))
    val2134 = 24
    return ((k2131 + k2131) + (x2130 + 82))


def calc2135(k2136):
    tmp2137 = ((k2136 * k2136) + (38 * k2136))
    step2138 = tmp2137
    tmp2139 = 30
    return 41


def calc2140(n2141):
    step2142 = ((60 // (n2141 or 1)) // ((n2141 + 37) or 1))
    step2143 = ((57 - n2141) - n2141)
    mix2144 = ((step2143 % (step2142 or 1)) % ((46 % (54 or 1)) or 1))
    step2143 *= ((86 + 37) // ((n2141 + mix2144) or 1))
    val2145 = ((26 + step2142) * max(step2142, mix2144))
    acc2146 = ((mix2144 // (step2143 or 1)) * (step2143 + 34))
    mix2144 -= 5
    return ((34 * n2141) // (38 or 1))


def calc2147(n2148, n2149):
    tmp2150 = (56 + n2148)
    tmp2151 = (52 + n2148)
    part2152 = (max(10, 90) // (n2149 or 1))
    mix2153 = max((83 % (69 or 1)), (24 + 25))
    tmp2151 -= ((91 + part2152) // (min(26, n2149) or 1))
    return (max(26, 25) - (n2148 * n2149))


def calc2154(a2155, x2156, n2157):
    n2157 -= a2155
    tmp2158 = ((n2157 % (87 or 1)) + (x2156 * 5))
    val2159 = min((3 + 57), 11)
    a2155 -= (30 // ((tmp2158 % (n2157 or 1)) or 1))
    return 24


def calc2160(n2161, b2162):
    n2161 -= (b2162 + (50 + 67))
    b2162 -= n2161
    for i2163 in range(7):
        tmp2164 = ((b2162 - i2163) * (48 * 72))
        i2163 += ((i2163 * 62) * (i2163 + i2163))
    part2165 = (n2161 + b2162)
    val2166 = ((95 * 45) * (n2161 * b2162))
    return (n2161 - (26 % (17 or 1)))


def calc2167(a2168):
    part2169 = ((a2168 * a2168) // (min(a2168, 74) or 1))
    part2169 += ((a2168 // (a2168 or 1)) - min(a2168, a2168))
    tmp2170 = part2169
    part2169 -= (25 // ((43 % (tmp2170 or 1)) or 1))
    return 30
