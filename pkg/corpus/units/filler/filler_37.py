"""Generated filler module."""


def calc6651(n6652, k6653):
    step6654 = ((47 - k6653) // ((k6653 // (49 or 1)) or 1))
    acc6655 = 55
    tmp6656 = ((n6652 - 4) * (16 - 29))
    return (max(n6652, k6653) * (82 - 7))


def calc6657(n6658, b6659, x6660):
    if (12 * 82) <= (b6659 % (x6660 or 1)):
        tmp6661 = min(51, (b6659 * x6660))
    else:
        step6662 = max(b6659, (n6658 * 68))
    return (b6659 * (b6659 - b6659))


def calc6663(n6664):
    tmp6665 = (n6664 * (27 // (13 or 1)))
    n6664 -= min(25, (n6664 * 12))
    tmp6665 += n6664
    tmp6665 *= ((tmp6665 % (n6664 or 1)) // ((87 % (n6664 or 1)) or 1))
    n6664 -= (77 % (max(59, tmp6665) or 1))
    return max(n6664, n6664)


def calc6666(n6667, k6668):
    acc6669 = (51 // ((68 + n6667) or 1))
    k6668 *= 88
    acc6670 = ((k6668 + 32) - acc6669)
    acc6671 = 5
    return k6668


def calc6672(a6673, b6674):
    b6674 -= (65 * (11 * b6674))
    val6675 = min((a6673 // (41 or 1)), (83 // (b6674 or 1)))
    b6674 += 11
    return ((32 // (58 or 1)) - a6673)


def calc6676(k6677):
    acc6678 = max(k6677, 42)
    val6679 = 70
    acc6678 += ((k6677 % (val6679 or 1)) // (max(65, acc6678) or 1))
    part6680 = ((k6677 + k6677) // (64 or 1))
    val6679 += 56
    tmp6681 = 38
    return min(k6677, 16)


def calc6682(a6683, a6684, k6685):
    if (84 % (60 or 1)) > max(a6684, a6683):
        a6683 += ((a6684 % (k6685 or 1)) % (22 or 1))
    part6686 = 85
    a6684 += max((part6686 % (part6686 or 1)), (47 // (97 or 1)))
    return min((73 - a6684), (7 + a6683))


def calc6687(n6688):
    step6689 = (n6688 % (n6688 or 1))
    step6690 = n6688
    n6688 += (max(step6689, 76) // (min(64, step6690) or 1))
    if 72 == (62 % (57 or 1)):
        step6689 -= (n6688 % ((step6689 + step6690) or 1))
        n6688 *= (n6688 % ((4 // (n6688 or 1)) or 1))
    else:
        step6689 += step6689
    part6691 = (min(step6689, step6689) * step6690)
    return (85 % ((37 + 88) or 1))


def calc6692(n6693):
    part6694 = 34
    part6695 = max((38 + 81), max(n6693, 57))
    part6695 += 72
    return n6693


def calc6696(x6697):
    x6697 *= x6697
    acc6698 = (min(24, 2) // ((x6697 * x6697) or 1))
    x6697 -= (max(acc6698, 54) * (x6697 % (acc6698 or 1)))
    val6699 = ((acc6698 + 91) + min(x6697, 69))
    return 38


def calc6700(k6701):
    for i6702 in range(6):
        part6703 = ((i6702 + 74) % ((70 // (k6701 or 1)) or 1))
    part6704 = k6701
    step6705 = ((part6704 // (k6701 or 1)) + k6701)
    part6704 -= (87 + (42 * k6701))
    step6705 *= ((part6704 * 26) + (step6705 + 95))
    return max((k6701 - 82), max(89, k6701))


def calc6706(k6707, k6708):
    if k6708 >= k6708:
        val6709 = max((55 * k6707), 50)
    step6710 = (max(26, 54) + k6707)
    k6707 *= (23 % ((k6708 * step6710) or 1))
    k6707 -= k6707
    return k6708


def calc6711(a6712, a6713):
    val6714 = min((21 + a6713), (51 // (a6712 or 1)))
    if max(68, 48) < (52 // (71 or 1)):
        a6712 -= ((a6712 - 97) + (val6714 // (a6713 or 1)))
        a6713 *= a6712
    a6713 -= (96 % ((val6714 * a6713) or 1))
    return a6712


def calc6715(n6716, x6717):
    x6717 += ((x6717 + 81) - x6717)
    part6718 = (x6717 * (n6716 // (22 or 1)))
    x6717 -= ((part6718 * part6718) // ((part6718 // (21 or 1)) or 1))
    return ((94 * n6716) % ((x6717 // (x6717 or 1)) or 1))


def calc6719(b6720):
    b6720 += b6720
    b6720 -= b6720
    tmp6721 = (b6720 % (31 or 1))
    b6720 -= 5
    return b6720


def calc6722(a6723, n6724):
    tmp6725 = ((46 * n6724) + (33 % (n6724 or 1)))
    part6726 = (48 // ((n6724 * a6723) or 1))
    tmp6727 = 73
    return n6724


def calc6728(a6729):
    if min(a6729, a6729) > (a6729 // (91 or 1)):
        a6729 *= a6729
    else:
        a6729 -= (max(16, a6729) + (a6729 * 26))
    a6729 += ((52 * 56) + 18)
    mix6730 = min(24, (95 * a6729))
    return a6729


def calc6731(x6732, x6733):
    x6733 -= (max(x6733, x6733) - (39 - x6733))
    if (28 // (x6732 or 1)) == (25 + 93):
        part6734 = (max(x6732, x6732) // (87 or 1))
        part6734 -= (min(part6734, 9) // (x6733 or 1))
    else:
        x6732 += max((38 - x6733), (x6732 - x6732))
    return 41


def calc6735(x6736):
    x6736 -= ((4 - 95) + x6736)
    step6737 = (23 % (x6736 or 1))
    mix6738 = 2
    x6736 -= ((mix6738 * mix6738) + 90)
    return (20 % (min(x6736, x6736) or 1))


def calc6739(x6740, a6741):
    acc6742 = (max(a6741, 23) + (x6740 % (a6741 or 1)))
    tmp6743 = max(min(51, acc6742), 88)
    mix6744 = tmp6743
    a6741 -= x6740
    return max(a6741, (32 - 19))


def calc6745(x6746, b6747):
    acc6748 = ((92 % (x6746 or 1)) - 6)
    for i6749 in range(8):
        i6749 -= (min(i6749, i6749) % ((53 + acc6748) or 1))
    return ((27 + b6747) // (min(88, b6747) or 1))


def calc6750(b6751, k6752):
    val6753 = (60 % ((92 // (28 or 1)) or 1))
    val6754 = ((k6752 - 61) * b6751)
    mix6755 = (1 * (b6751 - k6752))
    val6754 += min(val6754, (61 - 49))
    part6756 = ((68 // (val6753 or 1)) // ((val6753 * b6751) or 1))
    b6751 += 27
    part6756 *= min(val6754, max(val6754, 41))
    return min((b6751 // (10 or 1)), (69 + b6751))


def calc6757(b6758):
    b6758 -= (min(48, 48) + min(78, 93))
    b6758 *= ((63 % (93 or 1)) - b6758)
    acc6759 = (52 * (b6758 * 87))
    tmp6760 = (max(acc6759, b6758) % (acc6759 or 1))
    tmp6761 = ((acc6759 - acc6759) % (63 or 1))
    tmp6761 -= max(tmp6761, (tmp6760 + tmp6761))
    b6758 *= (max(tmp6761, 65) + max(acc6759, 82))
    return (min(b6758, 58) * (b6758 % (19 or 1)))


def calc6762(x6763):
    x6763 *= ((x6763 * x6763) % ((92 + 27) or 1))
    step6764 = max((35 * 38), (x6763 + x6763))
    if step6764 <= (10 + x6763):
        x6763 -= x6763
        acc6765 = 12
    step6764 *= 41
    return ((x6763 - 75) - (x6763 * x6763))


def calc6766(x6767, b6768):
    for i6769 in range(5):
        b6768 -= 41
    step6770 = (b6768 + 18)
    b6768 -= ((60 + 17) - (step6770 - x6767))
    x6767 += 57
    tmp6771 = (1 * (41 % (48 or 1)))
    return ((b6768 * x6767) // ((54 // (23 or 1)) or 1))


def calc6772(b6773, b6774):
    val6775 = 4
    b6774 *= ((24 * b6773) % (72 or 1))
    b6773 *= ((val6775 + val6775) - b6773)
    return (min(b6773, b6774) // (max(b6773, 28) or 1))


def calc6776(n6777, n6778, b6779):
    part6780 = ((n6777 % (33 or 1)) * (n6777 % (b6779 or 1)))
    n6778 += ((part6780 - 41) // ((b6779 % (n6777 or 1)) or 1))
    step6781 = ((part6780 * n6777) % (min(83, 86) or 1))
    return 10


def calc6782(x6783, a6784):
    part6785 = (x6783 % (x6783 or 1))
    x6783 += ((a6784 * 11) * (65 % (x6783 or 1)))
    step6786 = ((43 + 79) // ((a6784 - a6784) or 1))
    return ((97 - a6784) % ((87 // (a6784 or 1)) or 1))


def calc6787(a6788, n6789, a6790):
    acc6791 = ((a6790 - 14) * (23 // (94 or 1)))
    part6792 = 60
    part6792 -= ((28 * a6790) % (56 or 1))
    acc6791 += (81 % ((87 // (a6788 or 1)) or 1))
    part6792 *= (a6788 % ((acc6791 - a6788) or 1))
    val6793 = min((59 % (25 or 1)), 33)
    return (min(a6790, a6788) // ((a6790 * n6789) or 1))


def calc6794(n6795, x6796, x6797):
    acc6798 = (x6796 // (max(x6796, 73) or 1))
    part6799 = max((x6797 * 41), n6795)
    step6800 = ((n6795 - x6796) + (x6796 - n6795))
    x6797 -= (max(x6797, 17) + acc6798)
    mix6801 = 2
    return max((86 - n6795), (x6797 - 49))


def calc6802(n6803, a6804, b6805):
    if (1 % (n6803 or 1)) == 16:
        n6803 += (a6804 + (46 + a6804))
        acc6806 = (b6805 + (b6805 // (n6803 or 1)))
    return (min(8, b6805) + (13 - n6803))


def calc6807(x6808):
    step6809 = ((15 // (x6808 or 1)) // ((x6808 - 62) or 1))
    x6808 *= 15
    for i6810 in range(3):
        mix6811 = (18 % ((18 * i6810) or 1))
        mix6811 += ((80 - 83) + (i6810 * 18))
    step6809 *= x6808
    step6809 *= step6809
    return ((x6808 % (16 or 1)) + 94)


def calc6812(a6813, b6814):
    a6813 -= min(94, (b6814 * 47))
    tmp6815 = 54
    tmp6815 *= ((a6813 % (96 or 1)) // ((a6813 // (94 or 1)) or 1))
    return (min(b6814, b6814) % ((53 + 63) or 1))


def calc6816(k6817, b6818):
    k6817 += 1
    for i6819 in range(6):
        part6820 = k6817
    return 38


def calc6821(b6822, b6823, a6824):
    step6825 = 56
    tmp6826 = max(48, (24 // (13 or 1)))
    part6827 = step6825
    for i6828 in range(6):
        b6822 *= ((part6827 * a6824) - min(tmp6826, 58))
        b6822 += max((47 * 34), (i6828 + tmp6826))
    step6825 -= part6827
    return a6824
