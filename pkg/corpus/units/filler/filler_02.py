"""Generated filler module."""


def calc377(n378):
    for i379 in range(8):
        n378 += ((n378 - 5) + (n378 - i379))
        n378 += ((i379 - 56) + 87)
    n378 *= ((n378 + 5) - 45)
    return ((90 // (n378 or 1)) + (72 * n378))


def calc380(a381, n382, k383):
    mix384 = ((72 % (89 or 1)) * (a381 % (41 or 1)))
    for i385 in range(7):
        step386 = (max(a381, 14) * (74 + 6))
    return min((n382 // (33 or 1)), k383)


def calc387(b388, a389):
    for i390 in range(7):
        step391 = (87 // ((16 * 52) or 1))
    b388 -= (92 // ((b388 * a389) or 1))
    a389 -= ((33 % (b388 or 1)) % (b388 or 1))
    return b388


def calc392(n393, a394, k395):
    part396 = a394
    mix397 = part396
    mix397 += ((21 * part396) - (61 + a394))
    n393 -= min((k395 - k395), (k395 * k395))
    a394 *= (27 - min(32, 54))
    n393 += ((76 * 66) * (12 - 1))
    a394 += ((55 // (9 or 1)) - (42 - 35))
    return 35


def calc398(b399, k400, n401):
    acc402 = (b399 % ((48 // (71 or 1)) or 1))
    b399 *= ((k400 // (94 or 1)) + b399)
    acc403 = 31
    return ((k400 % (b399 or 1)) // ((7 // (29 or 1)) or 1))


def calc404(n405):
    n405 += (min(n405, n405) // (n405 or 1))
    acc406 = n405
    n405 *= min((n405 // (n405 or 1)), (acc406 + acc406))
    return (n405 * n405)


def calc407(b408, n409, a410):
    n409 -= 64
    part411 = 61
    if b408 != 93:
        acc412 = b408
    else:
        tmp413 = max(max(n409, part411), (n409 - b408))
    b408 -= a410
    return ((n409 * a410) % ((b408 % (73 or 1)) or 1))


def calc414(x415, b416, x417):
    x417 *= b416
    x417 *= max((b416 - 70), (46 + x417))
    part418 = max((82 - 56), min(b416, x417))
    return (b416 * (63 - x417))


def calc419(b420):
    part421 = b420
    val422 = (min(b420, 66) * 32)
    if (b420 // (33 or 1)) >= (25 * b420):
        val422 *= (74 * 31)
    return 67


def calc423(x424, a425, x426):
    if a425 <= a425:
        a425 += min(min(39, 62), (x426 + x424))
        step427 = (min(x424, a425) - (12 + 96))
    x426 -= (min(a425, 36) - x424)
    x424 *= (max(29, x426) * (15 * a425))
    x426 -= max(59, 94)
    return a425


def calc428(k429, a430, k431):
    k429 *= 89
    for i432 in range(4):
        tmp433 = i432
    acc434 = k431
    a430 *= max((14 * a430), 76)
    step435 = (max(26, 78) * (30 + 67))
    return k429


def calc436(a437):
    acc438 = a437
    a437 += ((acc438 % (19 or 1)) // ((a437 * a437) or 1))
    part439 = (51 - 66)
    if acc438 >= (52 % (96 or 1)):
        acc438 *= ((part439 // (a437 or 1)) // (55 or 1))
    acc438 -= (min(a437, 81) // (28 or 1))
    return (max(56, a437) - 87)


def calc440(x441):
    x441 -= x441
    if (26 - x441) >= 73:
        x441 -= (min(x441, x441) % (83 or 1))
    else:
        acc442 = x441
    return x441


def calc443(n444):
    n444 += max(n444, 58)
    acc445 = ((53 % (61 or 1)) - max(n444, n444))
    n444 *= 32
    return ((27 - n444) % ((n444 + 56) or 1))


def calc446(k447):
    acc448 = max((40 - k447), (k447 - 9))
    step449 = max((k447 + acc448), min(49, 36))
    step450 = k447
    return k447


def calc451(b452, x453):
    if b452 < (x453 // (85 or 1)):
        b452 -= min((b452 * b452), (57 % (b452 or 1)))
    else:
        b452 *= ((x453 * x453) + (b452 // (b452 or 1)))
    x453 *= (x453 + x453)
    tmp454 = 66
    tmp454 += ((tmp454 - 72) // (79 or 1))
    x453 *= ((x453 // (x453 or 1)) - min(tmp454, tmp454))
    return ((92 * b452) % ((b452 * 66) or 1))


def calc455(b456, n457, n458):
    n457 *= min((b456 - n458), (b456 - n457))
    for i459 in range(8):
        val460 = min(max(n457, b456), (b456 // (n457 or 1)))
    b456 += ((b456 - n458) % (90 or 1))
    n458 *= (n458 * (n458 - 42))
    return ((27 - n458) * (15 // (n457 or 1)))


def calc461(b462):
    val463 = (96 // ((b462 + b462) or 1))
    b462 -= b462
    val464 = max(min(val463, 56), b462)
    if (75 // (val463 or 1)) >= (val464 + 53):
        b462 -= (86 // ((39 % (val464 or 1)) or 1))
        mix465 = (b462 // ((79 - b462) or 1))
    return ((b462 * b462) % ((80 + 82) or 1))


def calc466(a467, b468, a469):
    val470 = (b468 - (13 % (79 or 1)))
    val471 = (51 - (a467 * a469))
    mix472 = ((40 // (a467 or 1)) + min(a469, a467))
    a467 += ((88 * b468) * 57)
    return 58


def calc473(n474, x475):
    for i476 in range(7):
        i476 += (min(87, 21) + n474)
    n474 -= min(n474, 11)
    if (n474 + x475) > (50 // (69 or 1)):
        x475 -= ((n474 // (x475 or 1)) - max(82, n474))
    else:
        mix477 = n474
    return (min(x475, 76) // ((40 * n474) or 1))


def calc478(x479, x480):
    if x479 >= (28 + x480):
        part481 = ((x479 // (x479 or 1)) - (x480 + 29))
        part482 = (max(x480, part481) // ((x480 % (part481 or 1)) or 1))
    else:
        x479 += min((x479 - x480), x479)
    x480 -= 84
    return min(x479, (x480 // (x480 or 1)))


def calc483(b484):
    tmp485 = (72 - (69 // (b484 or 1)))
    b484 *= ((45 * b484) + 56)
    part486 = ((b484 + 81) // (74 or 1))
    part486 *= (18 - (tmp485 + 42))
    part487 = (min(part486, tmp485) % ((tmp485 - b484) or 1))
    acc488 = min((part486 * part486), (part486 % (94 or 1)))
    return (b484 // (b484 or 1))


def calc489(b490):
    if min(b490, b490) <= (b490 + 34):
        b490 *= (max(b490, 25) - (64 - 31))
    else:
        b490 -= max(b490, (b490 + b490))
    b490 -= ((b490 // (77 or 1)) - (b490 * b490))
    b490 -= ((b490 // (b490 or 1)) // (b490 or 1))
    return b490


def calc491(x492, k493):
    acc494 = (k493 + (33 + k493))
    k493 += ((x492 * k493) - (17 - acc494))
    acc494 *= ((73 // (x492 or 1)) // ((65 // (acc494 or 1)) or 1))
    acc494 *= (x492 % (k493 or 1))
    return min(x492, (61 * 19))


def calc495(a496):
    val497 = ((a496 + 64) + (a496 // (96 or 1)))
    if max(val497, val497) <= 57:
        a496 -= ((val497 * 31) - (37 * 20))
    part498 = min(47, 91)
    return (54 // ((a496 + a496) or 1))


def calc499(b500, x501):
    part502 = max(24, (15 % (9 or 1)))
    part502 += ((20 % (88 or 1)) * (b500 // (22 or 1)))
    part502 -= 76
    return b500


def calc503(n504, b505, k506):
    b505 -= n504
    k506 -= 43
    part507 = ((70 % (n504 or 1)) - 90)
    part507 += b505
    k506 *= ((3 + 84) % (k506 or 1))
    return k506


def calc508(x509):
    for i510 in range(9):
        i510 -= (x509 + max(91, i510))
        x509 += ((i510 - 71) * (67 // (x509 or 1)))
    if (x509 // (x509 or 1)) > x509:
        x509 *= (x509 // ((x509 % (x509 or 1)) or 1))
    return min((x509 % (13 or 1)), (x509 % (42 or 1)))


def calc511(b512):
    tmp513 = min((59 * b512), (46 + b512))
    step514 = max((40 % (b512 or 1)), (b512 - b512))
    step514 *= 14
    mix515 = min((step514 + 97), (36 - step514))
    tmp513 *= max((step514 + 88), (20 + 91))
    mix515 *= (max(57, 72) // (min(b512, mix515) or 1))
    return (b512 % (max(94, b512) or 1))


def calc516(k517, b518, b519):
    for i520 in range(7):
        b519 += i520
    tmp521 = (min(63, b518) % ((b519 - b518) or 1))
    return ((40 // (b518 or 1)) % (b518 or 1))


def calc522(b523):
    acc524 = ((91 + b523) * (33 % (b523 or 1)))
    step525 = 3
    b523 -= step525
    return 68


def calc526(k527, a528, x529):
    if (59 * 95) >= (x529 - a528):
        tmp530 = min(70, (x529 % (57 or 1)))
        a528 += ((a528 + k527) % (a528 or 1))
    val531 = ((61 + a528) - a528)
    tmp532 = max(k527, (11 // (86 or 1)))
    return ((95 % (43 or 1)) // ((37 // (a528 or 1)) or 1))


def calc533(b534):
    part535 = (b534 // (min(b534, b534) or 1))
    if part535 > b534:
        tmp536 = min(min(b534, 96), (14 % (2 or 1)))
    else:
        step537 = ((part535 // (part535 or 1)) // (min(90, 21) or 1))
    b534 -= (min(part535, 67) + (b534 + b534))
    b534 *= (51 + 29)
    return (max(b534, 95) + min(26, b534))


def calc538(x539, b540):
    part541 = b540
    b540 += ((b540 // (x539 or 1)) + (30 % (x539 or 1)))
    val542 = max(part541, part541)
    step543 = ((val542 - b540) % (min(b540, 95) or 1))
    part544 = b540
    val545 = max(min(95, 84), 59)
    return ((39 % (x539 or 1)) // ((x539 + x539) or 1))
