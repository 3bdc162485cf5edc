"""Generated filler module."""


def calc5557(k5558, n5559):
    step5560 = (93 % (min(58, n5559) or 1))
    k5558 *= ((step5560 + 20) + 54)
    if max(n5559, k5558) < (n5559 // (19 or 1)):
        mix5561 = ((k5558 + 14) % (87 or 1))
        step5562 = 17
    else:
        k5558 -= ((40 // (step5560 or 1)) - max(n5559, k5558))
    n5559 += 38
    return ((77 - n5559) - 6)


def calc5563(k5564, a5565):
    if max(k5564, 29) != (k5564 % (a5565 or 1)):
        mix5566 = ((77 % (k5564 or 1)) - k5564)
        part5567 = min((1 % (28 or 1)), (3 - a5565))
    else:
        k5564 -= (29 - (k5564 - k5564))
    val5568 = (17 + k5564)
    tmp5569 = ((k5564 % (a5565 or 1)) + a5565)
    tmp5570 = (min(k5564, val5568) - (k5564 - 9))
    return ((70 + k5564) // ((19 % (36 or 1)) or 1))


def calc5571(a5572):
    acc5573 = (min(a5572, a5572) // (a5572 or 1))
    mix5574 = acc5573
    val5575 = (acc5573 + 33)
    val5576 = 70
    for i5577 in range(3):
        val5575 += (mix5574 // ((72 - a5572) or 1))
        mix5578 = (max(20, 73) % ((val5575 - 56) or 1))
    return a5572


def calc5579(x5580):
    x5580 += ((81 % (x5580 or 1)) + (x5580 + x5580))
    x5580 *= min(81, min(14, x5580))
    mix5581 = 26
    return ((x5580 * x5580) // ((x5580 * x5580) or 1))


def calc5582(n5583):
    if (n5583 * 55) <= (n5583 + 68):
        acc5584 = ((46 // (n5583 or 1)) - (n5583 + n5583))
    return ((n5583 + 95) - n5583)


def calc5585(x5586, a5587):
    step5588 = ((a5587 - x5586) * max(48, 78))
    step5588 *= (54 * step5588)
    val5589 = 63
    step5588 -= val5589
    return max(86, min(a5587, a5587))


def calc5590(a5591):
    mix5592 = a5591
    if (a5591 + mix5592) >= min(mix5592, a5591):
        a5591 += mix5592
    return (64 // ((20 * a5591) or 1))


def calc5593(k5594, x5595):
    for i5596 in range(4):
        k5594 -= k5594
    return max((52 + 7), min(k5594, 62))


def calc5597(x5598, n5599, b5600):
    for i5601 in range(3):
        b5600 *= max(min(b5600, 5), 82)
        i5601 -= max(min(9, 95), b5600)
    x5598 += min((b5600 - b5600), b5600)
    x5598 -= 60
    x5598 += ((42 + b5600) // (min(x5598, b5600) or 1))
    n5599 -= 89
    return ((88 - 59) - (55 % (27 or 1)))


def calc5602(k5603, b5604):
    b5604 *= (k5603 - b5604)
    part5605 = max(20, (b5604 * 52))
    acc5606 = k5603
    return 15


def calc5607(x5608, x5609, a5610):
    x5608 -= ((39 % (a5610 or 1)) * (x5608 - a5610))
    a5610 += a5610
    tmp5611 = ((23 % (87 or 1)) % (max(x5609, a5610) or 1))
    acc5612 = min((69 // (tmp5611 or 1)), (tmp5611 // (x5608 or 1)))
    tmp5613 = x5608
    tmp5611 += min(min(29, acc5612), (x5608 // (55 or 1)))
    return 29


def calc5614(k5615, a5616):
    k5615 *= ((94 + 61) * max(94, 55))
    a5616 *= ((k5615 % (32 or 1)) % ((73 - 3) or 1))
    k5615 += (max(94, k5615) % ((k5615 - 42) or 1))
    part5617 = k5615
    return min((k5615 % (k5615 or 1)), min(k5615, k5615))


def calc5618(k5619, x5620):
    step5621 = ((54 * k5619) % ((x5620 - k5619) or 1))
    x5620 -= (43 % (max(16, step5621) or 1))
    step5622 = ((45 % (35 or 1)) - min(step5621, k5619))
    return x5620


def calc5623(x5624, n5625, k5626):
    for i5627 in range(2):
        i5627 *= 69
    x5624 *= 1
    return min(k5626, (x5624 + 30))


def calc5628(k5629):
    part5630 = (min(k5629, 97) * (k5629 - 5))
    step5631 = min(part5630, (85 % (75 or 1)))
    if (step5631 * 20) != 75:
        mix5632 = part5630
    val5633 = ((87 * 95) * (k5629 - part5630))
    tmp5634 = max((40 * k5629), (part5630 // (val5633 or 1)))
    return (min(k5629, 25) * min(3, k5629))


def calc5635(x5636, a5637, n5638):
    x5636 *= ((x5636 // (42 or 1)) // ((x5636 // (68 or 1)) or 1))
    tmp5639 = ((28 * 60) % (x5636 or 1))
    mix5640 = max((60 - tmp5639), max(a5637, 50))
    step5641 = ((x5636 // (n5638 or 1)) + a5637)
    step5641 -= ((46 // (n5638 or 1)) + (29 * 27))
    x5636 *= min(97, max(81, 88))
    return x5636


def calc5642(b5643):
    b5643 *= (90 % ((b5643 - 81) or 1))
    mix5644 = (max(b5643, 13) // ((97 * b5643) or 1))
    step5645 = max(mix5644, 22)
    b5643 *= (40 * (31 + mix5644))
    tmp5646 = max((mix5644 // (32 or 1)), (mix5644 * mix5644))
    return 3


def calc5647(x5648, x5649):
    step5650 = min((89 + x5649), (39 * 50))
    if x5649 >= 75:
        x5649 -= (step5650 // ((x5648 % (71 or 1)) or 1))
    step5650 += 45
    step5651 = ((51 * 27) % (34 or 1))
    return ((75 + x5648) * (x5649 * 49))


def calc5652(n5653):
    n5653 -= n5653
    tmp5654 = ((76 + n5653) + (44 - n5653))
    step5655 = ((48 * 95) * 8)
    tmp5656 = min((tmp5654 + n5653), (71 - step5655))
    tmp5654 += n5653
    return 78


def calc5657(x5658, a5659):
    acc5660 = (max(x5658, a5659) * (74 + a5659))
    if min(acc5660, x5658) < (37 % (x5658 or 1)):
        part5661 = ((31 // (x5658 or 1)) % ((70 // (45 or 1)) or 1))
        tmp5662 = part5661
    mix5663 = (3 - acc5660)
    return ((a5659 // (a5659 or 1)) + max(x5658, a5659))


def calc5664(b5665, x5666, a5667):
    x5666 *= (min(59, 18) % (x5666 or 1))
    a5667 += 46
    b5665 *= max(max(90, 5), (10 * 49))
    a5667 += ((59 % (62 or 1)) - max(a5667, b5665))
    return 62


def calc5668(n5669):
    n5669 *= max(n5669, (n5669 - n5669))
    n5669 += 7
    n5669 += max(max(n5669, n5669), min(63, n5669))
    return 78


def calc5670(a5671, b5672, b5673):
    b5673 *= 57
    part5674 = (26 + (89 // (b5673 or 1)))
    val5675 = b5673
    part5676 = (b5673 // (part5674 or 1))
    val5677 = max(78, (41 + b5672))
    return min(b5673, b5673)


def calc5678(n5679):
    part5680 = ((n5679 % (n5679 or 1)) * n5679)
    acc5681 = ((n5679 * 83) // (min(n5679, part5680) or 1))
    for i5682 in range(7):
        i5682 *= min(6, max(39, part5680))
        mix5683 = ((n5679 % (29 or 1)) - i5682)
    mix5684 = part5680
    acc5681 -= 68
    return min(83, (17 // (87 or 1)))


def calc5685(b5686, b5687):
    if b5686 > 47:
        b5686 *= b5686
        b5686 *= ((b5687 - b5686) * 76)
    else:
        val5688 = (b5687 - (b5686 // (70 or 1)))
    for i5689 in range(3):
        part5690 = ((57 // (86 or 1)) % (b5687 or 1))
        step5691 = min((64 + 96), (1 + 57))
    b5686 -= ((b5686 + 34) + (90 // (b5686 or 1)))
    return max((b5687 + b5687), min(34, b5687))


def calc5692(n5693, n5694, n5695):
    n5695 -= max(min(78, 3), (n5695 // (n5693 or 1)))
    val5696 = (n5694 - (84 - n5695))
    n5693 += 63
    for i5697 in range(8):
        n5693 -= 94
    val5698 = (66 // (max(val5696, 50) or 1))
    return ((21 % (56 or 1)) + (n5695 * 61))


def calc5699(n5700, b5701, a5702):
    a5702 -= ((59 // (66 or 1)) // (n5700 or 1))
    if (n5700 * a5702) == (b5701 // (a5702 or 1)):
        tmp5703 = a5702
    mix5704 = ((29 % (76 or 1)) - min(47, 93))
    return n5700


def calc5705(x5706, b5707, x5708):
    step5709 = b5707
    for i5710 in range(4):
        x5708 += ((x5708 * 23) // ((x5706 * x5706) or 1))
    b5707 -= ((x5708 - b5707) + (step5709 + 18))
    return ((44 % (x5708 or 1)) * (93 % (58 or 1)))


def calc5711(b5712, b5713):
    b5713 -= ((54 * b5712) * (66 * b5712))
    part5714 = (28 + max(17, 9))
    b5712 -= ((b5712 - b5713) * 71)
    val5715 = ((58 % (part5714 or 1)) // (b5713 or 1))
    return ((b5712 * 18) // (min(b5713, 7) or 1))


def calc5716(x5717, n5718):
    if max(x5717, x5717) != (18 - x5717):
        val5719 = x5717
        acc5720 = 28
    mix5721 = ((x5717 % (x5717 or 1)) - (69 % (x5717 or 1)))
    for i5722 in range(6):
        x5717 *= i5722
        mix5721 -= max(mix5721, x5717)
    return min((10 // (x5717 or 1)), (n5718 - x5717))


def calc5723(k5724, n5725, a5726):
    for i5727 in range(4):
        n5725 += 89
    return 16


def calc5728(b5729, a5730):
    a5730 *= (66 % (a5730 or 1))
    acc5731 = 13
    for i5732 in range(8):
        b5729 -= ((a5730 // (a5730 or 1)) + (19 + b5729))
    step5733 = ((a5730 * 49) + (b5729 // (a5730 or 1)))
    acc5731 += ((20 - 83) - step5733)
    return a5730


def calc5734(k5735):
    for i5736 in range(9):
        tmp5737 = ((13 % (2 or 1)) // ((k5735 - k5735) or 1))
        step5738 = 71
    return ((k5735 + k5735) + (k5735 - 81))


def calc5739(k5740):
    val5741 = ((k5740 - k5740) + k5740)
    tmp5742 = k5740
    tmp5743 = ((tmp5742 * tmp5742) // (min(96, val5741) or 1))
    val5741 -= (tmp5742 * k5740)
    part5744 = max(tmp5742, (8 + 50))
    return ((21 * 73) * k5740)
