"""Generated filler module."""


def calc546(a547):
    a547 += ((a547 // (a547 or 1)) // (a547 or 1))
    if 82 > (a547 - 27):
        a547 *= (a547 - 3)
        a547 += ((28 % (6 or 1)) // ((a547 * 73) or 1))
    else:
        a547 -= ((a547 * 90) - (56 + a547))
    return (a547 // (39 or 1))


def calc548(k549):
    part550 = ((48 * k549) % (min(12, k549) or 1))
    for i551 in range(7):
        i551 -= ((37 % (40 or 1)) % ((19 % (43 or 1)) or 1))
        i551 -= k549
    part550 += ((46 % (10 or 1)) % (k549 or 1))
    k549 -= 48
    return k549


def calc552(a553):
    val554 = (a553 % (a553 or 1))
    val554 += ((7 - val554) % ((75 * a553) or 1))
    part555 = val554
    part555 += a553
    return ((13 - a553) // (a553 or 1))


def calc556(a557):
    val558 = 30
    for i559 in range(7):
        part560 = ((a557 + 16) % (min(i559, 58) or 1))
    a557 -= (a557 + (a557 // (val558 or 1)))
    acc561 = ((a557 - 65) * (78 - val558))
    return a557


def calc562(n563, k564):
    k564 += (max(k564, 42) - n563)
    acc565 = (n563 + (n563 * 60))
    k564 += max(acc565, (87 - 80))
    acc565 -= k564
    n563 *= (max(54, k564) + n563)
    n563 -= max(min(acc565, 21), acc565)
    n563 *= ((acc565 + 12) + n563)
    return (min(46, k564) + 53)


def calc566(x567):
    x567 += ((94 // (x567 or 1)) + (49 - 10))
    part568 = (x567 * (x567 - x567))
    if 35 != min(part568, 80):
        x567 *= ((x567 // (87 or 1)) + (part568 - x567))
        val569 = (84 - 84)
    else:
        step570 = ((x567 % (part568 or 1)) - part568)
    part568 *= x567
    part568 -= ((7 + 47) - x567)
    return ((94 * x567) % ((x567 + 28) or 1))


def calc571(x572, a573, k574):
    for i575 in range(7):
        acc576 = 8
        acc576 *= (k574 - (acc576 * 46))
    return (k574 - 8)


def calc577(x578):
    x578 -= ((x578 % (x578 or 1)) % (71 or 1))
    part579 = x578
    mix580 = 19
    step581 = max(max(36, mix580), part579)
    return x578


def calc582(n583, b584, n585):
    for i586 in range(3):
        part587 = max(n585, (b584 // (i586 or 1)))
        tmp588 = 32
    part589 = 75
    acc590 = (48 // (max(61, n583) or 1))
    acc590 -= 9
    return ((80 // (b584 or 1)) % (b584 or 1))


def calc591(k592, b593):
    mix594 = ((k592 * 6) * b593)
    tmp595 = mix594
    mix596 = mix594
    for i597 in range(2):
        b593 += ((85 + 45) % ((i597 + tmp595) or 1))
    return ((67 // (k592 or 1)) // ((73 + k592) or 1))


def calc598(a599):
    part600 = (a599 + 11)
    part601 = 23
    part600 *= part601
    part601 += min(16, (59 * part600))
    tmp602 = (29 % ((a599 - part600) or 1))
    part601 *= ((a599 // (a599 or 1)) % (a599 or 1))
    return ((a599 // (a599 or 1)) * min(89, a599))


def calc603(k604, n605):
    n605 -= n605
    n605 += n605
    val606 = ((n605 + 42) + k604)
    step607 = 2
    acc608 = (val606 // (min(24, n605) or 1))
    step609 = (21 + (n605 * 34))
    return 93


def calc610(n611, x612, a613):
    for i614 in range(2):
        a613 += (31 - min(i614, n611))
    step615 = n611
    return a613


def calc616(n617):
    step618 = (min(76, 18) * 65)
    n617 += ((90 // (66 or 1)) % (n617 or 1))
    n617 += 47
    return ((17 * 58) + (n617 * 94))


def calc619(n620, a621):
    acc622 = (a621 * 88)
    mix623 = ((38 + 86) // ((a621 % (a621 or 1)) or 1))
    val624 = min(a621, 53)
    tmp625 = ((25 // (32 or 1)) // (max(45, n620) or 1))
    mix626 = min((acc622 + 89), (val624 // (a621 or 1)))
    mix623 *= 17
    return max((38 % (50 or 1)), (16 * 84))


def calc627(x628):
    acc629 = x628
    acc630 = 74
    part631 = min((x628 % (acc629 or 1)), (69 + acc629))
    tmp632 = min((20 - acc630), (77 % (x628 or 1)))
    if (acc630 - part631) > 90:
        part633 = (tmp632 - (tmp632 * part631))
    return (x628 % ((x628 % (x628 or 1)) or 1))


def calc634(x635, k636):
    x635 *= max(max(k636, k636), max(49, k636))
    part637 = ((64 - k636) // (max(51, 23) or 1))
    part637 *= min(min(x635, 38), (x635 - part637))
    return x635


def calc638(x639, a640, b641):
    if b641 != x639:
        acc642 = 21
    b641 -= 70
    return 96


def calc643(a644):
    val645 = ((a644 * a644) - min(15, 5))
    acc646 = 73
    acc646 += (96 % ((val645 // (val645 or 1)) or 1))
    return 29


def calc647(b648, a649, x650):
    part651 = ((x650 % (18 or 1)) % ((39 + x650) or 1))
    val652 = (x650 * (12 % (x650 or 1)))
    b648 -= min((70 + 15), min(part651, val652))
    part651 -= (15 + b648)
    return ((x650 * 78) % ((b648 % (b648 or 1)) or 1))


def calc653(a654, k655, a656):
    k655 -= (a656 % ((k655 // (8 or 1)) or 1))
    tmp657 = ((a656 + 12) + min(a656, k655))
    acc658 = (tmp657 // ((a654 + 83) or 1))
    acc658 -= ((tmp657 // (acc658 or 1)) * tmp657)
    return max((52 // (k655 or 1)), (46 * 19))


def calc659(x660, b661):
    tmp662 = 63
    b661 *= min((49 - 12), (tmp662 // (33 or 1)))
    x660 *= (tmp662 % (43 or 1))
    x660 -= ((x660 // (96 or 1)) - (88 * x660))
    tmp663 = ((tmp662 * 3) - (b661 + b661))
    acc664 = 32
    acc665 = (min(tmp663, tmp663) // (b661 or 1))
    return x660


def calc666(k667, x668):
    val669 = ((44 * 77) * (k667 + k667))
    x668 -= 8
    step670 = (x668 + (val669 - 38))
    step671 = ((k667 - val669) % (max(val669, 39) or 1))
    tmp672 = (step671 - (step671 - step670))
    mix673 = 58
    x668 += x668
    return k667


def calc674(a675, k676):
    acc677 = max((k676 - 15), (5 // (a675 or 1)))
    tmp678 = (acc677 * min(k676, 97))
    acc677 += (min(k676, acc677) - min(12, tmp678))
    tmp679 = (max(tmp678, 30) % (a675 or 1))
    tmp679 += (max(37, a675) - max(15, 81))
    k676 -= k676
    acc677 *= ((a675 + 17) + (tmp678 + k676))
    return ((47 * a675) - (a675 - 9))


def calc680(n681, b682, k683):
    val684 = (max(19, 69) // ((b682 // (61 or 1)) or 1))
    val685 = k683
    val686 = ((val684 - 62) * (63 * n681))
    val684 *= ((37 // (78 or 1)) // (min(49, 96) or 1))
    acc687 = ((28 // (val685 or 1)) % (val684 or 1))
    return ((95 - k683) // ((93 * 55) or 1))


def calc688(n689, x690):
    x690 *= ((x690 - 50) + n689)
    val691 = max(20, min(x690, x690))
    val692 = ((47 - val691) + (91 % (24 or 1)))
    val693 = ((val692 % (87 or 1)) // (10 or 1))
    return ((x690 - n689) // (min(2, n689) or 1))


def calc694(b695, k696, n697):
    n697 -= min(k696, (89 - k696))
    k696 -= ((69 // (39 or 1)) + (n697 + 82))
    tmp698 = max((b695 + 25), (29 - b695))
    return ((68 // (b695 or 1)) % (max(36, b695) or 1))


def calc699(x700, a701):
    step702 = max((32 * x700), (a701 * 10))
    part703 = min((91 * 12), 58)
    x700 += (88 // ((x700 + 95) or 1))
    val704 = ((x700 // (97 or 1)) + step702)
    return 22


def calc705(b706, a707):
    tmp708 = ((56 - 15) + 87)
    if (b706 - b706) <= 30:
        b706 *= max((38 - 35), 77)
    else:
        a707 += ((b706 + 3) % (a707 or 1))
    for i709 in range(3):
        b706 -= (78 // (55 or 1))
        tmp710 = ((13 - 17) * 39)
    return min(max(59, a707), (5 * 70))


def calc711(k712, a713, b714):
    if b714 < min(78, 6):
        tmp715 = 88
    else:
        b714 *= (min(71, b714) * (k712 % (11 or 1)))
    a713 *= 83
    b714 *= ((80 + a713) % ((50 % (80 or 1)) or 1))
    return (k712 // ((a713 // (k712 or 1)) or 1))


def calc716(n717, n718):
    step719 = ((n717 * 77) * (n717 % (90 or 1)))
    step719 -= (step719 + n718)
    mix720 = 60
    if (54 + mix720) > (35 % (7 or 1)):
        step721 = 83
        tmp722 = step719
    n718 += min((70 - mix720), (n717 + 21))
    return ((n717 * 69) // (max(73, n718) or 1))


def calc723(a724, k725, k726):
    k726 -= min((a724 * a724), a724)
    if (k726 - 33) != 57:
        tmp727 = (61 % (k726 or 1))
    a724 *= ((a724 - 96) + k726)
    k726 *= ((a724 // (k726 or 1)) // ((k726 % (39 or 1)) or 1))
    a724 -= 92
    return ((69 - k725) // (min(k726, k725) or 1))


def calc728(x729, a730, n731):
    part732 = 20
    if (x729 % (n731 or 1)) < (n731 + x729):
        x729 *= (part732 % (max(13, n731) or 1))
    a730 *= (max(n731, 87) - max(n731, n731))
    val733 = max(47, (29 - x729))
    return ((n731 + 68) % (n731 or 1))
