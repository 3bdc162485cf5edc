"""Generated filler module."""


def calc197(n198, k199):
    mix200 = ((k199 // (46 or 1)) - (4 - 85))
    if (k199 - n198) > min(23, k199):
        mix201 = ((k199 + 5) * (75 + 37))
        acc202 = max((57 % (n198 or 1)), (k199 % (81 or 1)))
    else:
        n198 -= (n198 + (n198 % (mix200 or 1)))
    k199 += 86
    mix200 += 18
    return (min(k199, n198) * (71 - n198))


def calc203(n204):
    n204 += n204
    n204 -= (95 - max(n204, n204))
    acc205 = ((n204 * n204) // ((94 % (n204 or 1)) or 1))
    return n204


def calc206(n207):
    n207 *= ((64 * n207) * n207)
    n207 -= (max(n207, n207) + n207)
    if (n207 % (n207 or 1)) < min(n207, 87):
        part208 = n207
        n207 -= ((n207 % (54 or 1)) % (93 or 1))
    else:
        n207 += 89
    n207 *= ((n207 + 84) // (min(n207, 26) or 1))
    val209 = ((81 - 92) - (n207 + 73))
    return ((52 - 18) % (51 or 1))


def calc210(a211):
    if (80 - a211) > (2 * 44):
        a211 *= (32 * (15 + a211))
        a211 *= max(a211, a211)
    a211 += ((a211 + 83) * (a211 * a211))
    mix212 = (a211 // (67 or 1))
    return min((50 + 94), (a211 * 43))


def calc213(b214, b215, n216):
    for i217 in range(6):
        step218 = ((88 + b215) - (82 + 13))
        n216 *= min(max(86, 62), (i217 - 20))
    b215 *= (b214 - (44 - n216))
    tmp219 = ((b214 - b214) // (max(63, b215) or 1))
    tmp220 = ((b215 + 74) + 17)
    return 2


def calc221(n222, a223, b224):
    b224 += ((b224 // (n222 or 1)) // ((64 * 6) or 1))
    acc225 = max(n222, 12)
    b224 -= min((n222 % (b224 or 1)), (b224 * acc225))
    n222 *= ((a223 + 16) * 52)
    b224 *= a223
    return ((b224 * b224) * (a223 - 28))


def calc226(n227, a228):
    part229 = ((62 * 28) // ((a228 - a228) or 1))
    tmp230 = ((6 - 27) - (77 * n227))
    part231 = 39
    acc232 = 18
    return ((n227 + n227) - (a228 * a228))


def calc233(k234, a235, a236):
    tmp237 = a235
    step238 = min(k234, (29 // (a235 or 1)))
    tmp239 = (step238 + k234)
    return ((a235 * 96) * 84)


def calc240(k241, k242, b243):
    part244 = ((5 // (85 or 1)) + k242)
    acc245 = max((61 // (k241 or 1)), (b243 % (part244 or 1)))
    mix246 = (max(9, acc245) + (93 % (34 or 1)))
    for i247 in range(4):
        k242 += ((k242 + i247) // (84 or 1))
        part248 = i247
    return ((b243 - b243) * (k242 + k242))


def calc249(x250):
    x250 -= x250
    if 36 <= x250:
        x250 += x250
    x250 *= max(53, max(x250, x250))
    return x250


def calc251(k252):
    k252 -= ((k252 // (k252 or 1)) + 60)
    mix253 = k252
    part254 = ((k252 + 28) + 74)
    part255 = (min(part254, mix253) % ((19 // (mix253 or 1)) or 1))
    part254 *= max((mix253 * 56), part254)
    mix256 = (72 % (44 or 1))
    return (k252 * k252)


def calc257(b258, b259):
    part260 = (min(10, b258) // (b258 or 1))
    step261 = ((33 // (7 or 1)) - (27 * b258))
    part262 = ((30 - b259) - (41 - 38))
    b258 -= max(b258, b259)
    step261 += b259
    step263 = ((30 % (step261 or 1)) * (part260 + b258))
    tmp264 = 1
    return min((23 + b259), 9)


def calc265(x266, k267, a268):
    if x266 < 53:
        k267 += min(min(62, x266), (x266 + a268))
    if 37 >= (2 - 69):
        part269 = ((k267 - 55) % (12 or 1))
    a268 *= a268
    return ((k267 * 76) + (23 + 6))


def calc270(a271, a272):
    if (88 - a271) <= (a272 + 62):
        mix273 = 7
    acc274 = ((a272 // (76 or 1)) * (39 // (18 or 1)))
    return (a271 % ((31 + 33) or 1))


def calc275(x276, a277):
    part278 = ((a277 + 15) * (55 // (a277 or 1)))
    part279 = x276
    part279 *= part278
    for i280 in range(9):
        val281 = 6
        a277 -= 47
    return a277


def calc282(k283, n284):
    step285 = 21
    k283 += ((step285 % (n284 or 1)) + (step285 // (95 or 1)))
    n284 -= max((step285 + n284), n284)
    val286 = (35 // (k283 or 1))
    if (36 % (23 or 1)) != (87 * val286):
        step285 *= ((22 * k283) * 7)
        acc287 = ((61 // (val286 or 1)) // ((step285 * step285) or 1))
    else:
        val286 *= ((k283 * 51) - (53 * val286))
    return 6


def calc288(x289, n290, n291):
    tmp292 = (n291 + (40 + 53))
    mix293 = n291
    tmp292 -= min((x289 - n291), (n290 + 86))
    tmp294 = (n291 - 97)
    mix295 = ((n291 % (n290 or 1)) // ((x289 - 50) or 1))
    acc296 = min(28, 18)
    x289 -= ((74 % (tmp292 or 1)) % ((44 + acc296) or 1))
    return (n291 + n291)


def calc297(a298, x299):
    x299 += ((a298 % (a298 or 1)) + (56 % (10 or 1)))
    a298 -= ((96 + a298) - (95 - 38))
    tmp300 = ((63 // (a298 or 1)) - (54 * a298))
    return (a298 * (x299 // (14 or 1)))


def calc301(n302):
    n302 += ((n302 % (n302 or 1)) // (n302 or 1))
    tmp303 = ((9 // (82 or 1)) // ((n302 - n302) or 1))
    mix304 = tmp303
    mix305 = ((95 - 96) // ((n302 // (tmp303 or 1)) or 1))
    val306 = 1
    n302 -= 29
    acc307 = (21 % ((n302 * mix305) or 1))
    return ((77 + n302) * 49)


def calc308(a309, a310, x311):
    a310 *= 4
    for i312 in range(9):
        a310 *= min((a309 + a309), x311)
    val313 = ((94 // (74 or 1)) % ((28 - a309) or 1))
    acc314 = (min(x311, a310) + (x311 + val313))
    val313 *= ((31 * 43) * val313)
    return (a309 + (x311 + 55))


def calc315(a316, x317, b318):
    step319 = ((97 - 22) + (a316 - 2))
    b318 -= (step319 + (84 - 84))
    a316 *= b318
    if (a316 // (b318 or 1)) <= max(a316, b318):
        x317 += ((73 - a316) * (b318 * 10))
    return x317


def calc320(n321):
    n321 += max(min(n321, n321), (31 + n321))
    part322 = n321
    tmp323 = part322
    n321 -= ((part322 - n321) // (part322 or 1))
    part322 *= part322
    return (n321 % ((n321 // (68 or 1)) or 1))


def calc324(k325, b326):
    mix327 = min(9, 62)
    mix327 += (b326 % ((mix327 // (mix327 or 1)) or 1))
    tmp328 = ((k325 * k325) * (k325 - b326))
    return ((k325 - b326) // (b326 or 1))


def calc329(k330):
    k330 -= 42
    if k330 == min(20, k330):
        mix331 = max(k330, k330)
        acc332 = k330
    return ((14 * 13) // (29 or 1))


def calc333(n334):
    n334 += max((48 % (n334 or 1)), (n334 % (n334 or 1)))
    part335 = max((n334 + n334), max(83, n334))
    val336 = (max(n334, 15) + (part335 - n334))
    return n334


def calc337(k338, a339, k340):
    a339 *= (min(71, 91) * (21 // (89 or 1)))
    val341 = max((26 - 86), (23 % (35 or 1)))
    if a339 <= (k340 - k338):
        k340 -= max((k338 * a339), (a339 * 43))
    acc342 = ((61 // (30 or 1)) // (min(61, 25) or 1))
    val343 = 28
    return 31


def calc344(x345, k346):
    x345 += k346
    for i347 in range(9):
        val348 = ((12 * k346) * k346)
    k346 *= x345
    x345 -= k346
    part349 = (min(29, 92) + k346)
    return max((18 * k346), 72)


def calc350(a351):
    acc352 = a351
    a351 += min((a351 + 86), max(acc352, a351))
    a351 += 93
    part353 = acc352
    part354 = ((44 - 41) - (part353 // (44 or 1)))
    mix355 = min((42 % (33 or 1)), part353)
    return ((97 % (a351 or 1)) * max(a351, 97))


def calc356(n357):
    n357 -= max(n357, (n357 + 41))
    step358 = (n357 * (n357 // (28 or 1)))
    acc359 = n357
    n357 += ((67 * n357) // (max(acc359, 41) or 1))
    step358 -= 30
    return n357


def calc360(a361, x362, a363):
    part364 = a361
    for i365 in range(6):
        i365 += 95
        part364 *= ((part364 - 2) // (a363 or 1))
    step366 = ((x362 + a361) - 71)
    x362 *= part364
    return (a363 // (78 or 1))


def calc367(k368, a369, a370):
    mix371 = 69
    a369 += ((72 + k368) - (55 + 91))
    val372 = min((mix371 % (32 or 1)), max(a369, a370))
    return a369


def calc373(k374, x375):
    x375 -= (43 // ((52 - x375) or 1))
    x375 *= 74
    k374 *= (81 % ((95 // (21 or 1)) or 1))
    x375 -= ((x375 // (k374 or 1)) - min(k374, k374))
    part376 = x375
    x375 += min(x375, 3)
    return k374
