"""Generated filler module."""


def calc6280(b6281):
    for i6282 in range(2):
        acc6283 = (72 - (b6281 // (i6282 or 1)))
    return b6281


def calc6284(a6285, n6286):
    val6287 = 4
    val6287 -= (min(69, 14) + (n6286 % (32 or 1)))
    if (n6286 + 75) < (a6285 + 57):
        a6285 *= max((n6286 % (val6287 or 1)), (val6287 * 94))
    else:
        mix6288 = (val6287 - (val6287 % (a6285 or 1)))
    return (61 + 63)


def calc6289(n6290, a6291, b6292):
    mix6293 = ((n6290 + 66) * (a6291 % (b6292 or 1)))
    acc6294 = ((mix6293 * b6292) - (3 + 78))
    mix6293 += (a6291 + (10 + n6290))
    acc6295 = ((b6292 * a6291) * 40)
    val6296 = max(mix6293, (52 + acc6295))
    return (min(a6291, 29) // ((14 % (8 or 1)) or 1))


def calc6297(n6298):
    mix6299 = ((n6298 // (n6298 or 1)) // ((88 % (57 or 1)) or 1))
    mix6299 *= ((n6298 // (4 or 1)) % ((92 % (27 or 1)) or 1))
    step6300 = ((mix6299 + n6298) + (mix6299 // (mix6299 or 1)))
    return n6298


def calc6301(b6302, n6303):
    if n6303 != min(25, b6302):
        b6302 *= (min(56, 51) + (b6302 % (n6303 or 1)))
        b6302 *= max((b6302 - b6302), (20 * b6302))
    else:
        n6303 *= ((b6302 % (n6303 or 1)) // ((75 // (n6303 or 1)) or 1))
    b6302 -= min((69 % (n6303 or 1)), 4)
    b6302 *= max((82 // (80 or 1)), 74)
    b6302 += ((n6303 - n6303) // ((b6302 - b6302) or 1))
    return (max(b6302, b6302) + (47 + b6302))


def calc6304(x6305, n6306):
    mix6307 = n6306
    x6305 += (max(n6306, x6305) - 1)
    tmp6308 = ((47 % (mix6307 or 1)) % ((60 % (43 or 1)) or 1))
    tmp6308 += max((64 % (n6306 or 1)), (41 - 89))
    return (n6306 + max(43, x6305))


def calc6309(a6310, a6311, b6312):
    tmp6313 = (87 * 13)
    val6314 = min(tmp6313, max(a6311, a6310))
    a6310 += max(a6311, (tmp6313 + tmp6313))
    val6315 = max(b6312, max(56, val6314))
    return (max(93, 42) - max(b6312, a6311))


def calc6316(x6317, x6318):
    tmp6319 = x6317
    val6320 = (max(x6317, tmp6319) + (73 + x6317))
    part6321 = ((15 % (tmp6319 or 1)) - 15)
    step6322 = min((x6318 // (x6318 or 1)), min(16, x6317))
    acc6323 = (x6317 + (step6322 * tmp6319))
    acc6323 *= x6317
    return 72


def calc6324(b6325, x6326):
    for i6327 in range(5):
        i6327 += 67
    for i6328 in range(7):
        b6325 += i6328
        step6329 = (68 - min(33, x6326))
    acc6330 = (b6325 - b6325)
    return (b6325 + b6325)


def calc6331(k6332, k6333):
    val6334 = 4
    mix6335 = ((91 - 37) + 55)
    tmp6336 = val6334
    return 25


def calc6337(x6338):
    x6338 *= 22
    if (75 % (19 or 1)) >= (10 // (x6338 or 1)):
        x6338 *= x6338
    else:
        x6338 += max((x6338 + 57), min(95, 59))
    x6338 *= 80
    return 6


def calc6339(k6340, a6341):
    part6342 = (95 * (3 + k6340))
    val6343 = ((part6342 % (30 or 1)) - a6341)
    part6344 = (part6342 % ((val6343 % (78 or 1)) or 1))
    step6345 = (min(90, 7) // (val6343 or 1))
    mix6346 = 60
    return (81 % (51 or 1))


def calc6347(a6348):
    tmp6349 = (min(a6348, a6348) * min(61, a6348))
    tmp6350 = ((tmp6349 % (tmp6349 or 1)) * (63 - a6348))
    a6348 -= ((a6348 * tmp6350) * 93)
    return a6348


def calc6351(a6352, n6353):
    acc6354 = max(min(a6352, 84), (n6353 + a6352))
    acc6355 = acc6354
    val6356 = (93 // ((acc6355 + 13) or 1))
    mix6357 = ((42 * 24) // ((val6356 + 77) or 1))
    a6352 *= acc6354
    return a6352


def calc6358(b6359, n6360):
    for i6361 in range(2):
        val6362 = ((b6359 // (66 or 1)) - (i6361 - i6361))
        n6360 *= (79 % ((66 - n6360) or 1))
    return ((b6359 + 76) - (b6359 - n6360))


def calc6363(a6364, b6365, x6366):
    x6366 -= ((40 % (25 or 1)) % ((x6366 - x6366) or 1))
    acc6367 = 60
    part6368 = min((81 // (42 or 1)), (a6364 * 5))
    acc6367 -= (38 % ((part6368 * x6366) or 1))
    acc6367 *= ((a6364 * a6364) - part6368)
    acc6367 += ((a6364 - 84) * (8 - acc6367))
    return (36 - (41 - x6366))


def calc6369(x6370, k6371, a6372):
    val6373 = x6370
    acc6374 = ((a6372 + 19) - 36)
    mix6375 = ((49 + 63) % ((acc6374 * a6372) or 1))
    x6370 += a6372
    return (min(68, x6370) // (max(8, 95) or 1))


def calc6376(a6377):
    a6377 += ((80 // (a6377 or 1)) * a6377)
    tmp6378 = (34 // (91 or 1))
    a6377 -= ((tmp6378 + 14) * max(tmp6378, 36))
    return a6377


def calc6379(n6380, b6381, b6382):
    if (62 - b6381) > (n6380 - n6380):
        acc6383 = (n6380 % ((75 - b6382) or 1))
        b6382 *= 67
    b6381 *= min((b6381 * b6382), n6380)
    return ((35 // (n6380 or 1)) - b6382)


def calc6384(x6385):
    x6385 *= ((x6385 % (x6385 or 1)) % ((40 + x6385) or 1))
    acc6386 = 45
    val6387 = (max(61, acc6386) + (acc6386 - 52))
    step6388 = val6387
    return (min(x6385, x6385) // ((83 - 84) or 1))


def calc6389(x6390, a6391):
    acc6392 = x6390
    acc6393 = x6390
    acc6394 = ((20 // (a6391 or 1)) % ((a6391 - a6391) or 1))
    return ((x6390 * a6391) % (82 or 1))


def calc6395(b6396, n6397):
    step6398 = n6397
    step6399 = 88
    b6396 *= ((step6398 // (32 or 1)) * min(57, 72))
    step6400 = 63
    return (b6396 - n6397)


def calc6401(b6402, x6403):
    tmp6404 = ((23 // (x6403 or 1)) - b6402)
    if (20 + 90) <= (b6402 * tmp6404):
        part6405 = ((tmp6404 * 79) - b6402)
    else:
        tmp6404 -= ((b6402 // (x6403 or 1)) // (max(69, tmp6404) or 1))
    if (84 // (tmp6404 or 1)) > 79:
        x6403 *= (47 - (tmp6404 - 86))
    else:
        b6402 *= b6402
    return (b6402 // ((40 - x6403) or 1))


def calc6406(b6407):
    tmp6408 = ((b6407 * b6407) // (b6407 or 1))
    tmp6408 *= b6407
    b6407 -= ((22 % (b6407 or 1)) % (50 or 1))
    part6409 = max((22 + b6407), (tmp6408 // (b6407 or 1)))
    part6409 -= b6407
    return (b6407 % (max(b6407, b6407) or 1))


def calc6410(a6411):
    val6412 = max((6 // (a6411 or 1)), (a6411 + 50))
    a6411 -= (min(val6412, val6412) % (min(69, 83) or 1))
    a6411 -= (72 // (min(a6411, 88) or 1))
    return max(21, 78)


def calc6413(k6414, n6415, b6416):
    n6415 += (max(67, 34) // ((b6416 % (k6414 or 1)) or 1))
    n6415 -= 70
    b6416 += max((77 % (63 or 1)), (n6415 % (30 or 1)))
    return (k6414 * b6416)


def calc6417(x6418, a6419):
    x6418 += x6418
    tmp6420 = (63 % ((x6418 - 69) or 1))
    step6421 = ((62 * 23) - max(89, 79))
    a6419 -= ((70 * step6421) * 3)
    acc6422 = (a6419 * (a6419 % (tmp6420 or 1)))
    x6418 *= ((90 * acc6422) % (21 or 1))
    return x6418


def calc6423(k6424):
    val6425 = 3
    val6425 += 32
    k6424 *= ((k6424 * val6425) + (val6425 - val6425))
    return (min(k6424, 20) // ((k6424 * k6424) or 1))


def calc6426(a6427, b6428, k6429):
    b6428 -= 52
    part6430 = max((k6429 // (b6428 or 1)), (k6429 - a6427))
    step6431 = ((92 + a6427) // ((part6430 + 18) or 1))
    part6432 = ((79 // (k6429 or 1)) - (a6427 * b6428))
    part6432 *= ((b6428 % (11 or 1)) * (k6429 * a6427))
    tmp6433 = b6428
    part6430 += a6427
    return ((k6429 % (b6428 or 1)) % (67 or 1))


def calc6434(a6435):
    part6436 = ((a6435 * 79) * a6435)
    part6436 *= a6435
    tmp6437 = (max(part6436, a6435) % (70 or 1))
    return ((a6435 + 32) % (min(83, 47) or 1))


def calc6438(x6439):
    for i6440 in range(3):
        val6441 = ((36 % (i6440 or 1)) % (i6440 or 1))
        x6439 -= (val6441 % ((22 * 79) or 1))
    return max((x6439 + x6439), (x6439 // (x6439 or 1)))


def calc6442(n6443, k6444):
    mix6445 = ((n6443 % (38 or 1)) - (66 - 37))
    part6446 = k6444
    mix6445 -= (min(mix6445, mix6445) * (73 + 45))
    return (n6443 // ((n6443 - 10) or 1))


def calc6447(n6448, x6449):
    if 6 >= (n6448 // (4 or 1)):
        n6448 += (max(n6448, 14) - (44 + x6449))
        x6449 -= n6448
    else:
        part6450 = (n6448 % (x6449 or 1))
    n6448 -= ((92 + x6449) + x6449)
    return max((x6449 % (80 or 1)), min(n6448, n6448))


def calc6451(b6452):
    step6453 = b6452
    step6454 = 43
    mix6455 = (step6454 + step6454)
    return (44 + (b6452 + b6452))


def calc6456(a6457, k6458, a6459):
    step6460 = max(min(a6457, k6458), (70 * a6459))
    mix6461 = min((18 * a6457), (20 * 94))
    for i6462 in range(6):
        acc6463 = k6458
        mix6464 = (min(acc6463, 62) % ((10 * step6460) or 1))
    mix6461 -= (mix6461 * k6458)
    return (62 % (26 or 1))
