"""Generated filler module."""


def calc2171(a2172, k2173):
    if (a2172 * k2173) == 83:
        k2173 *= (a2172 - max(47, 15))
    return (96 - k2173)


def calc2174(n2175):
    n2175 += ((n2175 // (n2175 or 1)) // ((n2175 % (n2175 or 1)) or 1))
    n2175 -= n2175
    val2176 = ((n2175 // (57 or 1)) - 27)
    return 94


def calc2177(k2178, k2179):
    mix2180 = max(max(k2178, 62), k2178)
    for i2181 in range(9):
        mix2180 += ((3 - 94) * (k2179 // (mix2180 or 1)))
    mix2180 -= mix2180
    return (k2179 - (k2178 * 39))


def calc2182(a2183):
    a2183 -= (a2183 * (a2183 % (a2183 or 1)))
    a2183 *= a2183
    step2184 = ((62 + a2183) // (min(14, a2183) or 1))
    a2183 -= (a2183 + (56 % (a2183 or 1)))
    a2183 *= (step2184 * (48 * a2183))
    step2184 *= 55
    return ((83 - a2183) - (71 * 92))


def calc2185(a2186):
    a2186 *= (6 - a2186)
    a2186 *= ((a2186 - a2186) + max(a2186, a2186))
    a2186 += ((a2186 % (72 or 1)) + max(29, a2186))
    return ((a2186 - 56) // (a2186 or 1))


def calc2187(x2188):
    val2189 = ((x2188 // (68 or 1)) % ((x2188 + x2188) or 1))
    step2190 = min((val2189 * val2189), (92 - 90))
    val2189 *= 9
    return min(20, (x2188 * 86))


def calc2191(n2192):
    tmp2193 = n2192
    if (tmp2193 + tmp2193) < max(tmp2193, n2192):
        tmp2193 += (n2192 + 4)
    val2194 = ((6 - tmp2193) + 1)
    step2195 = (min(val2194, 7) + 69)
    tmp2193 -= max((step2195 * n2192), min(63, 49))
    return ((17 % (n2192 or 1)) + min(n2192, n2192))


def calc2196(a2197, k2198):
    a2197 *= (k2198 + min(3, a2197))
    part2199 = k2198
    if (a2197 % (part2199 or 1)) <= (k2198 + k2198):
        a2197 += (max(part2199, a2197) * k2198)
        part2199 -= ((65 + 83) * a2197)
    else:
        part2199 += ((part2199 % (17 or 1)) * (56 + k2198))
    return k2198


def calc2200(n2201):
    n2201 -= n2201
    if min(58, 48) > (n2201 - 53):
        part2202 = 83
        step2203 = part2202
    acc2204 = ((49 + 62) - (n2201 + 81))
    acc2204 *= min(max(n2201, 16), 49)
    step2205 = max(10, (66 // (n2201 or 1)))
    return n2201


def calc2206(n2207):
    if (n2207 % (58 or 1)) > (n2207 % (81 or 1)):
        mix2208 = 74
    else:
        n2207 -= ((n2207 % (54 or 1)) % ((19 % (n2207 or 1)) or 1))
    return n2207


def calc2209(b2210, x2211, a2212):
    tmp2213 = b2210
    if b2210 <= x2211:
        step2214 = a2212
    x2211 *= b2210
    acc2215 = max(b2210, x2211)
    b2210 *= (tmp2213 // ((b2210 // (4 or 1)) or 1))
    return ((88 * a2212) - (b2210 // (a2212 or 1)))


def calc2216(k2217):
    val2218 = 65
    k2217 -= max(max(k2217, val2218), 21)
    if 13 <= (k2217 // (val2218 or 1)):
        tmp2219 = ((27 * 14) + (val2218 + k2217))
        tmp2220 = 10
    acc2221 = (94 - (88 - 58))
    acc2222 = (37 % (20 or 1))
    return (7 % ((k2217 % (k2217 or 1)) or 1))


def calc2223(b2224, a2225, n2226):
    for i2227 in range(6):
        a2225 -= (82 // ((41 - a2225) or 1))
        acc2228 = n2226
    b2224 += max(n2226, b2224)
    mix2229 = ((51 % (9 or 1)) - 22)
    return max((n2226 - 47), (3 // (66 or 1)))


def calc2230(a2231, b2232):
    val2233 = min((a2231 + 47), 29)
    mix2234 = max((a2231 // (val2233 or 1)), min(val2233, b2232))
    a2231 += min(14, (44 + 57))
    step2235 = 87
    step2235 += (a2231 - min(b2232, 87))
    return min(max(87, 10), a2231)


def calc2236(a2237):
    a2237 *= ((33 // (a2237 or 1)) * (56 - 22))
    if (70 * 60) > (a2237 // (a2237 or 1)):
        step2238 = (16 % ((a2237 - a2237) or 1))
    acc2239 = min((16 * a2237), min(60, a2237))
    a2237 -= ((acc2239 % (24 or 1)) * min(97, a2237))
    return ((a2237 // (a2237 or 1)) - (a2237 * a2237))


def calc2240(x2241, b2242, a2243):
    step2244 = x2241
    x2241 *= (max(37, x2241) - (82 % (b2242 or 1)))
    step2244 -= b2242
    b2242 -= ((b2242 % (b2242 or 1)) // ((93 + 84) or 1))
    return ((x2241 // (a2243 or 1)) // (55 or 1))


def calc2245(x2246, a2247):
    part2248 = ((x2246 - a2247) - (78 - a2247))
    acc2249 = ((x2246 // (83 or 1)) // (x2246 or 1))
    step2250 = max((acc2249 % (x2246 or 1)), x2246)
    step2251 = acc2249
    return a2247


def calc2252(n2253, b2254):
    b2254 -= ((40 // (70 or 1)) + (67 - b2254))
    for i2255 in range(4):
        i2255 += (23 * max(67, 44))
        acc2256 = ((46 // (9 or 1)) * (4 - b2254))
    b2254 -= (6 % (b2254 or 1))
    return 57


def calc2257(a2258, k2259):
    a2258 += ((k2259 // (k2259 or 1)) % (a2258 or 1))
    tmp2260 = ((k2259 + a2258) * (16 % (92 or 1)))
    k2259 *= 71
    k2259 -= (tmp2260 * k2259)
    return a2258


def calc2261(n2262):
    if (n2262 // (36 or 1)) > n2262:
        mix2263 = n2262
    else:
        n2262 -= (24 - 29)
    n2262 += max((n2262 // (n2262 or 1)), 24)
    return n2262


def calc2264(k2265, n2266, n2267):
    n2266 += (75 % ((n2267 % (66 or 1)) or 1))
    mix2268 = ((k2265 + k2265) // (max(49, 29) or 1))
    if 73 == k2265:
        step2269 = ((mix2268 - k2265) % ((k2265 - n2267) or 1))
    part2270 = n2266
    part2271 = mix2268
    return (n2267 - (n2267 + n2266))


def calc2272(n2273, a2274, b2275):
    acc2276 = (b2275 * max(n2273, n2273))
    if 32 < (44 % (22 or 1)):
        tmp2277 = (a2274 + max(84, 25))
        acc2278 = ((a2274 - acc2276) * (n2273 % (25 or 1)))
    else:
        acc2276 -= (min(a2274, a2274) * (44 - 49))
    val2279 = acc2276
    return 44


def calc2280(n2281, a2282):
    tmp2283 = ((a2282 - 27) % (max(a2282, a2282) or 1))
    tmp2283 *= 2
    if (tmp2283 % (47 or 1)) > (88 * 10):
        part2284 = ((tmp2283 // (51 or 1)) // (min(23, 27) or 1))
        tmp2283 *= 31
    return ((n2281 % (a2282 or 1)) % (20 or 1))


def calc2285(x2286):
    val2287 = x2286
    for i2288 in range(2):
        mix2289 = val2287
    acc2290 = 40
    return (max(85, 51) - (x2286 * 40))


def calc2291(k2292, k2293, n2294):
    if max(k2293, 92) == (45 - k2292):
        n2294 -= 89
        n2294 += n2294
    else:
        mix2295 = max((29 % (k2293 or 1)), (92 - 93))
    for i2296 in range(5):
        k2293 += max(29, (50 * 75))
        k2293 -= max((6 + 34), min(i2296, 77))
    return 83


def calc2297(x2298):
    part2299 = ((x2298 * 29) % ((x2298 // (x2298 or 1)) or 1))
    tmp2300 = ((49 + 88) + (part2299 + x2298))
    for i2301 in range(9):
        part2302 = tmp2300
    acc2303 = (25 + (44 - 74))
    return (90 + (x2298 % (x2298 or 1)))


def calc2304(x2305):
    part2306 = x2305
    val2307 = (10 % ((8 - 16) or 1))
    acc2308 = (part2306 - (32 + 28))
    acc2308 -= max((10 % (acc2308 or 1)), (val2307 * val2307))
    acc2308 -= max((3 // (28 or 1)), (64 * 25))
    val2309 = max(max(part2306, 29), (74 % (x2305 or 1)))
    mix2310 = 45
    return ((x2305 * x2305) - x2305)


def calc2311(x2312):
    if x2312 != (x2312 // (x2312 or 1)):
        val2313 = max(x2312, x2312)
        step2314 = (x2312 + min(47, val2313))
    else:
        x2312 *= x2312
    x2312 += (92 * max(x2312, x2312))
    return (91 * (x2312 // (x2312 or 1)))


def calc2315(x2316):
    if max(x2316, x2316) < 77:
        x2316 *= 97
        part2317 = (max(x2316, x2316) - (37 + 23))
    else:
        x2316 -= min((8 % (14 or 1)), x2316)
    step2318 = x2316
    val2319 = ((step2318 // (15 or 1)) - x2316)
    step2318 *= (min(val2319, x2316) + (19 % (x2316 or 1)))
    x2316 += ((val2319 - x2316) // (min(95, 18) or 1))
    return ((19 - x2316) * 88)


def calc2320(a2321, a2322, n2323):
    mix2324 = n2323
    val2325 = mix2324
    val2326 = mix2324
    for i2327 in range(6):
        part2328 = ((mix2324 % (44 or 1)) * 20)
    return ((a2322 + 63) // ((a2322 % (96 or 1)) or 1))


def calc2329(x2330, k2331):
    k2331 *= ((k2331 % (k2331 or 1)) + k2331)
    step2332 = ((87 + 65) % ((k2331 - 25) or 1))
    val2333 = ((83 - k2331) * (step2332 // (59 or 1)))
    return ((k2331 // (22 or 1)) * 29)


def calc2334(n2335):
    n2335 += max((n2335 % (46 or 1)), n2335)
    n2335 -= max(max(n2335, 4), (58 + n2335))
    tmp2336 = ((21 * 11) // ((75 // (30 or 1)) or 1))
    part2337 = (max(n2335, n2335) - n2335)
    return ((16 - n2335) // ((76 // (n2335 or 1)) or 1))


def calc2338(a2339):
    part2340 = (max(a2339, a2339) % ((a2339 * a2339) or 1))
    for i2341 in range(4):
        a2339 -= (a2339 - max(part2340, 14))
    a2339 *= ((a2339 * a2339) % ((a2339 // (part2340 or 1)) or 1))
    return (a2339 - (42 - 87))
