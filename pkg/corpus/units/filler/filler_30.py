"""Generated filler module."""


def calc5379(k5380):
    acc5381 = 49
    tmp5382 = ((k5380 % (k5380 or 1)) + (acc5381 // (44 or 1)))
    for i5383 in range(7):
        val5384 = ((56 // (32 or 1)) * min(acc5381, k5380))
    step5385 = ((acc5381 + tmp5382) // ((tmp5382 // (acc5381 or 1)) or 1))
    step5386 = 30
    return ((k5380 - k5380) - max(k5380, 51))


def calc5387(n5388):
    if (n5388 * n5388) <= n5388:
        n5388 -= n5388
        n5388 += (min(n5388, n5388) % ((43 + 41) or 1))
    else:
        tmp5389 = 70
    if min(n5388, 29) >= n5388:
        mix5390 = n5388
        n5388 -= (92 - (57 - 75))
    return min((n5388 + n5388), n5388)


def calc5391(x5392):
    x5392 -= ((x5392 // (53 or 1)) - (x5392 + x5392))
    step5393 = (x5392 // (max(91, 34) or 1))
    step5394 = x5392
    val5395 = 47
    mix5396 = (val5395 + (59 + 38))
    mix5396 += max(min(x5392, 57), 52)
    x5392 -= step5394
    return 65


def calc5397(a5398, n5399):
    acc5400 = ((n5399 // (n5399 or 1)) - (30 - a5398))
    a5398 += min((a5398 - acc5400), max(30, 67))
    acc5400 -= 28
    mix5401 = max(max(30, acc5400), 29)
    return (56 * (37 % (55 or 1)))


def calc5402(b5403, x5404):
    b5403 += x5404
    b5403 += max((54 % (16 or 1)), (b5403 // (b5403 or 1)))
    acc5405 = (min(61, 44) % (x5404 or 1))
    return b5403


def calc5406(n5407):
    acc5408 = 56
    step5409 = (7 * 82)
    step5410 = acc5408
    step5409 *= max(step5410, (48 % (92 or 1)))
    return max((44 * 48), 30)


def calc5411(b5412, b5413):
    b5413 -= (1 - b5412)
    step5414 = (min(60, b5413) - (60 - 10))
    part5415 = b5412
    return b5413


def calc5416(a5417, k5418):
    part5419 = ((49 * k5418) - (56 - a5417))
    k5418 += ((29 % (40 or 1)) * (87 - k5418))
    part5419 *= ((4 * a5417) - (36 * 52))
    return ((36 % (14 or 1)) // (min(a5417, 57) or 1))


def calc5420(a5421):
    part5422 = 82
    if min(part5422, 39) >= min(79, 93):
        part5423 = ((47 % (a5421 or 1)) // (min(a5421, 21) or 1))
    else:
        part5422 *= (max(27, 18) * min(part5422, part5422))
    mix5424 = (min(a5421, 79) % ((part5422 // (46 or 1)) or 1))
    part5425 = min((12 - mix5424), max(a5421, a5421))
    return max(max(a5421, a5421), a5421)


def calc5426(k5427):
    step5428 = (26 - k5427)
    step5429 = ((k5427 // (step5428 or 1)) % ((k5427 - step5428) or 1))
    tmp5430 = (step5429 // ((step5429 % (38 or 1)) or 1))
    step5429 -= (step5429 + max(step5429, 66))
    tmp5430 -= 19
    val5431 = k5427
    return (k5427 // ((27 % (k5427 or 1)) or 1))


def calc5432(a5433, k5434, x5435):
    for i5436 in range(8):
        part5437 = 94
        val5438 = (min(92, 64) * min(77, k5434))
    if (8 // (6 or 1)) < (73 % (96 or 1)):
        x5435 -= k5434
        mix5439 = 28
    else:
        k5434 += x5435
    return ((63 // (k5434 or 1)) + (69 * a5433))


def calc5440(k5441, k5442):
    step5443 = 10
    if min(k5442, k5442) >= (step5443 - step5443):
        k5441 -= 29
        k5441 *= max((41 + k5441), 15)
    step5443 *= min((k5441 - 43), 67)
    k5442 += ((96 % (k5441 or 1)) // ((43 * 60) or 1))
    return ((k5441 * k5442) // (48 or 1))


def calc5444(b5445):
    if (b5445 - b5445) != 26:
        b5445 += b5445
    else:
        b5445 *= ((10 + b5445) - (12 - 25))
    tmp5446 = b5445
    return 54


def calc5447(b5448, x5449):
    b5448 -= ((47 // (x5449 or 1)) * max(17, b5448))
    tmp5450 = ((x5449 - x5449) + 96)
    tmp5451 = ((21 + b5448) // (79 or 1))
    if (x5449 - tmp5450) == 66:
        tmp5452 = (min(b5448, 73) // (min(40, 43) or 1))
        tmp5450 += max((62 // (93 or 1)), 61)
    return max(29, (69 % (27 or 1)))


def calc5453(n5454):
    if n5454 < (18 * 85):
        step5455 = ((n5454 + 59) + (49 % (61 or 1)))
        step5455 *= 42
    return n5454


def calc5456(b5457, x5458):
    if (82 * 31) < (b5457 * 52):
        x5458 += (min(15, 89) + (32 - b5457))
    else:
        x5458 -= ((4 // (90 or 1)) % ((b5457 * 75) or 1))
    part5459 = ((b5457 % (24 or 1)) * 91)
    acc5460 = b5457
    return 20


def calc5461(n5462, b5463):
    n5462 += b5463
    n5462 -= n5462
    n5462 += (min(61, 1) % ((94 - 94) or 1))
    return (min(b5463, n5462) * (45 - 75))


def calc5464(k5465, k5466, k5467):
    step5468 = k5467
    step5468 -= (k5465 % ((36 - 63) or 1))
    if (step5468 * 26) > (k5466 * 50):
        mix5469 = 88
    else:
        step5470 = ((k5465 - 30) // (26 or 1))
    k5465 *= (94 * max(13, k5466))
    val5471 = (min(21, 46) % ((64 % (step5468 or 1)) or 1))
    return (69 * max(k5466, 66))


def calc5472(b5473, x5474, x5475):
    step5476 = max(min(64, 20), 82)
    part5477 = x5474
    b5473 *= ((x5475 * 3) + (12 * x5474))
    return ((84 - x5475) * (b5473 % (21 or 1)))


def calc5478(n5479, b5480, n5481):
    val5482 = n5479
    n5479 += (max(n5481, 73) - n5481)
    b5480 += val5482
    b5480 -= (n5479 - (74 - val5482))
    return (min(85, 23) + max(n5479, 80))


def calc5483(a5484, b5485, n5486):
    if n5486 >= (82 - n5486):
        mix5487 = ((77 * 67) // (79 or 1))
    else:
        b5485 *= ((a5484 + b5485) // ((83 // (12 or 1)) or 1))
    a5484 -= 8
    return ((a5484 * b5485) - (a5484 // (a5484 or 1)))


def calc5488(a5489):
    for i5490 in range(4):
        a5489 *= (max(30, 51) % ((a5489 * a5489) or 1))
    return (a5489 - (59 % (14 or 1)))


def calc5491(a5492, a5493):
    step5494 = max((66 * a5492), a5492)
    val5495 = (step5494 + (a5492 + a5492))
    acc5496 = step5494
    step5497 = ((68 * 45) + 78)
    a5493 -= (80 % (step5497 or 1))
    val5498 = min((step5494 % (3 or 1)), (val5495 // (a5492 or 1)))
    return a5493


def calc5499(b5500, k5501):
    val5502 = (max(b5500, b5500) + (b5500 // (k5501 or 1)))
    k5501 += k5501
    part5503 = (val5502 % (max(k5501, 67) or 1))
    acc5504 = (min(96, val5502) + (k5501 + 13))
    step5505 = (min(b5500, 91) - 36)
    part5506 = ((63 + acc5504) - (15 % (65 or 1)))
    mix5507 = k5501
    return ((95 % (b5500 or 1)) + max(b5500, b5500))


def calc5508(x5509, n5510, n5511):
    if max(n5510, x5509) < (77 - n5510):
        n5510 -= n5510
        n5511 *= ((8 % (x5509 or 1)) // ((42 + 28) or 1))
    else:
        step5512 = min((93 // (n5511 or 1)), (n5511 + 53))
    return ((x5509 - 40) % (max(n5510, n5511) or 1))


def calc5513(a5514):
    if 68 <= a5514:
        part5515 = ((a5514 % (33 or 1)) * a5514)
        a5514 -= (a5514 - 59)
    else:
        step5516 = 68
    a5514 -= 36
    return (97 - max(15, a5514))


def calc5517(b5518, a5519, k5520):
    tmp5521 = (min(57, 19) - a5519)
    acc5522 = min((k5520 % (75 or 1)), (a5519 + tmp5521))
    acc5523 = ((25 + a5519) // (b5518 or 1))
    k5520 -= ((k5520 - b5518) % ((b5518 % (68 or 1)) or 1))
    return ((k5520 * 54) - (a5519 * 16))


def calc5524(b5525):
    b5525 += ((46 + b5525) - (88 // (94 or 1)))
    if (b5525 - b5525) == (16 * b5525):
        b5525 -= (57 // (b5525 or 1))
    else:
        val5526 = (85 % (82 or 1))
    return ((b5525 % (b5525 or 1)) // ((b5525 + 58) or 1))


def calc5527(b5528, k5529):
    step5530 = b5528
    acc5531 = ((step5530 * step5530) % (step5530 or 1))
    val5532 = (b5528 - min(b5528, 18))
    return (k5529 % ((16 + b5528) or 1))


def calc5533(a5534):
    step5535 = (a5534 % ((a5534 // (84 or 1)) or 1))
    step5535 += ((a5534 + step5535) % ((13 - 41) or 1))
    mix5536 = step5535
    if max(step5535, a5534) > 58:
        step5535 -= ((a5534 - mix5536) - mix5536)
    else:
        a5534 *= ((step5535 + mix5536) // ((25 * step5535) or 1))
    return a5534


def calc5537(n5538, k5539):
    val5540 = (23 // ((66 - k5539) or 1))
    acc5541 = ((14 - 77) * 21)
    val5542 = 63
    for i5543 in range(7):
        val5544 = (max(val5540, 74) // ((4 + acc5541) or 1))
    val5542 -= 76
    return ((25 + n5538) % (max(n5538, k5539) or 1))


def calc5545(a5546, x5547, x5548):
    val5549 = (x5548 * x5547)
    part5550 = ((28 + 15) // (a5546 or 1))
    x5547 -= a5546
    part5550 *= ((x5548 + 18) * (val5549 % (43 or 1)))
    return ((49 + 74) // (92 or 1))


def calc5551(a5552):
    acc5553 = max((a5552 * a5552), 40)
    acc5554 = (max(44, acc5553) * (acc5553 // (69 or 1)))
    val5555 = (a5552 - (acc5554 % (40 or 1)))
    val5555 += ((28 // (acc5554 or 1)) // ((a5552 - 43) or 1))
    acc5554 *= max((10 + val5555), (65 - val5555))
    tmp5556 = min(min(31, val5555), max(a5552, acc5554))
    return ((a5552 + a5552) * (a5552 * a5552))
