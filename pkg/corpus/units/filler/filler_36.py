"""Generated filler module."""


def calc6465(k6466, k6467, a6468):
    step6469 = (80 * (74 + a6468))
    for i6470 in range(2):
        k6467 += step6469
    a6468 -= k6466
    a6468 -= (k6466 + (29 % (42 or 1)))
    a6468 -= (max(5, k6466) // ((k6466 * k6466) or 1))
    return (a6468 // (max(k6467, k6467) or 1))


def calc6471(k6472, k6473):
    k6472 *= (92 + (86 * k6473))
    part6474 = ((k6473 * k6473) * (k6472 + k6472))
    part6474 *= k6473
    tmp6475 = (96 * part6474)
    acc6476 = 82
    mix6477 = min((tmp6475 - part6474), min(part6474, part6474))
    part6474 += (34 * (k6472 // (13 or 1)))
    return k6473


def calc6478(x6479, k6480):
    if 85 > (k6480 - k6480):
        val6481 = ((x6479 - 92) + 12)
    x6479 -= x6479
    return ((k6480 * 67) + k6480)


def calc6482(x6483, k6484, a6485):
    k6484 -= a6485
    k6484 -= 26
    for i6486 in range(5):
        step6487 = ((86 * a6485) + k6484)
        a6485 -= step6487
    return 29


def calc6488(b6489):
    acc6490 = b6489
    acc6490 -= ((b6489 - b6489) - (b6489 - 28))
    acc6490 += ((acc6490 * 2) * 79)
    tmp6491 = 75
    tmp6492 = (acc6490 % ((47 // (76 or 1)) or 1))
    return (7 + (46 - 63))


def calc6493(x6494, n6495):
    mix6496 = ((n6495 % (n6495 or 1)) % ((15 % (n6495 or 1)) or 1))
    mix6496 *= n6495
    mix6496 += ((18 % (53 or 1)) // (n6495 or 1))
    part6497 = min((x6494 - x6494), (60 * 57))
    return ((35 - 56) % ((31 // (71 or 1)) or 1))


def calc6498(b6499, a6500, x6501):
    tmp6502 = b6499
    part6503 = (min(x6501, b6499) + 16)
    part6504 = ((part6503 + x6501) - (b6499 % (x6501 or 1)))
    part6503 += max((32 + 4), 50)
    part6504 *= (tmp6502 * (6 % (52 or 1)))
    step6505 = ((part6504 * tmp6502) * (a6500 // (1 or 1)))
    acc6506 = 51
    return max(a6500, (38 % (a6500 or 1)))


def calc6507(a6508, n6509, x6510):
    n6509 -= ((84 % (n6509 or 1)) % ((x6510 * 44) or 1))
    for i6511 in range(6):
        acc6512 = max((84 // (57 or 1)), (50 * a6508))
    a6508 *= (a6508 // ((x6510 + x6510) or 1))
    acc6513 = a6508
    return min(min(a6508, 92), 1)


def calc6514(x6515):
    part6516 = min((x6515 - 80), min(x6515, x6515))
    part6517 = ((60 // (37 or 1)) + (x6515 * 60))
    part6516 *= ((11 // (25 or 1)) * 62)
    return (x6515 % (x6515 or 1))


def calc6518(k6519):
    if k6519 > k6519:
        tmp6520 = ((60 % (17 or 1)) * (k6519 % (10 or 1)))
    else:
        val6521 = 56
    k6519 *= ((k6519 % (k6519 or 1)) * (k6519 * 3))
    return 26


def calc6522(n6523, x6524, x6525):
    x6525 += ((x6524 * x6525) - (14 - x6525))
    for i6526 in range(3):
        val6527 = max(x6524, min(91, x6524))
    return (72 + (n6523 * x6525))


def calc6528(a6529, k6530, k6531):
    acc6532 = (k6530 // ((k6530 // (k6531 or 1)) or 1))
    if (k6530 - 88) <= (a6529 + 69):
        mix6533 = ((k6531 // (k6530 or 1)) % ((a6529 % (76 or 1)) or 1))
        tmp6534 = ((k6531 + 92) % (60 or 1))
    else:
        acc6535 = k6531
    step6536 = (35 + (55 % (k6531 or 1)))
    a6529 -= max(acc6532, 11)
    return k6530


def calc6537(b6538, b6539):
    if 27 >= (b6538 - 45):
        b6539 *= min(min(15, b6538), (38 - 36))
    tmp6540 = ((b6538 + 49) - (b6539 - b6538))
    b6539 *= 5
    return ((38 * 75) // (b6539 or 1))


def calc6541(a6542, k6543):
    k6543 *= (a6542 % ((39 * 95) or 1))
    part6544 = k6543
    part6544 *= min(a6542, 72)
    mix6545 = (min(part6544, 37) + a6542)
    mix6546 = max(part6544, (27 * a6542))
    return (k6543 * (60 + k6543))


def calc6547(a6548, a6549, n6550):
    a6549 -= (45 + a6549)
    for i6551 in range(2):
        a6548 += (min(15, i6551) + 45)
    return (n6550 * (a6548 - a6549))


def calc6552(k6553, b6554):
    k6553 *= max((48 % (b6554 or 1)), max(10, k6553))
    b6554 -= b6554
    b6554 += (71 // (k6553 or 1))
    part6555 = (max(b6554, b6554) // (min(80, 45) or 1))
    if part6555 <= (part6555 % (b6554 or 1)):
        part6556 = part6555
    return 77


def calc6557(x6558, n6559, n6560):
    if max(n6560, 87) >= (85 - 16):
        acc6561 = ((x6558 % (n6560 or 1)) % (max(x6558, n6559) or 1))
        n6559 += x6558
    return n6559


def calc6562(x6563, b6564, b6565):
    b6565 -= (max(b6565, 33) + (x6563 // (19 or 1)))
    step6566 = 1
    tmp6567 = 94
    return ((x6563 // (b6564 or 1)) + 38)


def calc6568(x6569):
    x6569 -= ((x6569 + 20) % ((95 - 40) or 1))
    step6570 = ((42 % (x6569 or 1)) * max(51, 4))
    tmp6571 = ((step6570 // (step6570 or 1)) // (x6569 or 1))
    step6572 = max((x6569 + 21), (25 + 80))
    for i6573 in range(4):
        part6574 = x6569
    return ((45 % (57 or 1)) + x6569)


def calc6575(n6576):
    n6576 -= (n6576 // ((57 - n6576) or 1))
    if 29 < (51 // (23 or 1)):
        n6576 += (19 * (25 // (30 or 1)))
        n6576 *= min(20, (n6576 - 58))
    return ((84 % (95 or 1)) // (97 or 1))


def calc6577(b6578, k6579, a6580):
    for i6581 in range(7):
        mix6582 = 27
    return 54


def calc6583(x6584, a6585):
    a6585 *= (49 // (14 or 1))
    step6586 = max(77, (43 // (19 or 1)))
    step6586 *= (max(91, step6586) + (x6584 * 66))
    acc6587 = (34 % (x6584 or 1))
    mix6588 = (95 % ((44 + 78) or 1))
    return ((x6584 % (56 or 1)) // ((a6585 + x6584) or 1))


def calc6589(k6590, x6591):
    x6591 -= ((k6590 % (25 or 1)) - (67 * 49))
    x6591 -= (max(k6590, 65) + 13)
    x6591 -= ((k6590 * x6591) + x6591)
    step6592 = ((x6591 * x6591) - min(k6590, k6590))
    return 53


def calc6593(n6594, n6595, a6596):
    part6597 = ((23 - n6594) % ((75 + 46) or 1))
    acc6598 = (part6597 * (45 * n6594))
    if (7 + a6596) != (a6596 - a6596):
        val6599 = (max(n6595, part6597) // ((9 % (part6597 or 1)) or 1))
        step6600 = a6596
    else:
        n6595 -= max((acc6598 - a6596), max(n6595, 29))
    n6594 += n6595
    return (80 * (62 * 57))


def calc6601(x6602, x6603):
    val6604 = ((15 + 91) * (x6603 - 15))
    mix6605 = (val6604 - (70 % (x6602 or 1)))
    val6604 *= x6603
    return (52 // (min(42, x6603) or 1))


def calc6606(x6607):
    for i6608 in range(3):
        i6608 += ((i6608 % (i6608 or 1)) - (91 + i6608))
    x6607 -= (26 + 65)
    x6607 += x6607
    return (x6607 * (x6607 // (x6607 or 1)))


def calc6609(k6610, x6611, x6612):
    mix6613 = k6610
    if (12 + 2) <= (mix6613 * 67):
        x6612 += 56
        acc6614 = max((x6612 // (x6611 or 1)), (k6610 * 91))
    else:
        mix6613 *= ((64 % (k6610 or 1)) - (x6611 % (35 or 1)))
    mix6613 += min((k6610 // (93 or 1)), (k6610 // (2 or 1)))
    part6615 = mix6613
    return (min(54, 15) - 34)


def calc6616(a6617):
    tmp6618 = 97
    if (62 + a6617) <= a6617:
        a6617 *= ((89 + 51) // ((tmp6618 - a6617) or 1))
    return min((76 % (a6617 or 1)), (a6617 + 36))


def calc6619(b6620, b6621, a6622):
    if b6620 < (5 // (a6622 or 1)):
        b6621 -= b6620
    b6621 += ((2 + a6622) // (min(b6620, b6621) or 1))
    if (b6620 + 45) <= max(51, a6622):
        a6622 += b6621
        b6620 += 70
    else:
        val6623 = ((b6621 + 68) * (b6620 + 4))
    return a6622


def calc6624(n6625, n6626):
    for i6627 in range(5):
        i6627 += ((n6626 - 77) % ((1 - 93) or 1))
    n6625 -= ((n6625 - 69) // (min(49, n6625) or 1))
    return ((n6625 % (n6626 or 1)) + (n6626 + 92))


def calc6628(b6629, k6630, n6631):
    mix6632 = max(b6629, (95 // (b6629 or 1)))
    step6633 = (b6629 // ((mix6632 // (k6630 or 1)) or 1))
    acc6634 = ((4 // (55 or 1)) % ((64 // (93 or 1)) or 1))
    step6635 = n6631
    step6635 -= (max(b6629, 40) - (95 // (k6630 or 1)))
    mix6636 = b6629
    return ((k6630 % (k6630 or 1)) + (b6629 % (n6631 or 1)))


def calc6637(a6638, a6639):
    val6640 = (max(a6638, a6638) - (22 * a6639))
    a6639 -= min(a6638, (55 + val6640))
    val6641 = ((38 - 88) // ((a6638 - val6640) or 1))
    a6639 += min((97 * a6638), a6639)
    val6640 -= ((34 - a6638) * (val6640 - 61))
    return max((37 // (a6638 or 1)), (36 + a6638))


def calc6642(x6643):
    val6644 = (max(x6643, x6643) * x6643)
    for i6645 in range(9):
        step6646 = i6645
        i6645 -= step6646
    x6643 -= ((x6643 + x6643) - 68)
    return ((x6643 // (44 or 1)) * (x6643 - 40))


def calc6647(a6648, k6649):
    if 1 < max(k6649, 49):
        k6649 *= 23
    else:
        a6648 += (k6649 // (76 or 1))
    for i6650 in range(3):
        i6650 *= ((i6650 + 47) * (58 // (60 or 1)))
        a6648 -= 74
    return 84
