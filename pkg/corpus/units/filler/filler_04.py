"""Generated filler module."""


def calc734(a735, a736, k737):
    part738 = (a736 // ((a735 * 45) or 1))
    k737 -= ((a736 + 63) // (min(part738, a735) or 1))
    tmp739 = (min(k737, 22) // (a735 or 1))
    acc740 = ((part738 % (60 or 1)) + (part738 % (a735 or 1)))
    part738 += ((acc740 + k737) // ((6 % (acc740 or 1)) or 1))
    return ((57 * 19) - (a735 - 57))


def calc741(b742):
    if (b742 + b742) < (81 % (59 or 1)):
        b742 += 92
    part743 = (28 // (37 or 1))
    part743 *= 36
    part743 -= ((b742 * part743) * (b742 * b742))
    return ((b742 - b742) // ((b742 + b742) or 1))


def calc744(n745):
    n745 *= ((n745 // (n745 or 1)) % ((n745 // (n745 or 1)) or 1))
    n745 += max((n745 * n745), (n745 - 73))
    val746 = 37
    for i747 in range(2):
        step748 = (max(i747, n745) * min(n745, 45))
    return (79 - (n745 - 71))


def calc749(a750, x751):
    tmp752 = min((a750 * a750), 56)
    part753 = (x751 // (a750 or 1))
    tmp752 -= min(tmp752, (tmp752 - part753))
    a750 += (41 // (min(x751, part753) or 1))
    return (min(a750, 45) * x751)


def calc754(b755):
    part756 = ((37 // (b755 or 1)) + 71)
    for i757 in range(2):
        val758 = ((part756 % (i757 or 1)) * i757)
    return (b755 // ((51 // (b755 or 1)) or 1))


def calc759(n760):
    val761 = ((n760 + n760) % (13 or 1))
    step762 = ((val761 * n760) // (78 or 1))
    step763 = (min(val761, n760) * min(54, n760))
    part764 = step763
    val765 = (max(val761, 2) * (73 * 46))
    n760 += (step763 * (part764 + n760))
    n760 -= ((15 // (45 or 1)) // (8 or 1))
    return 28


def calc766(k767, x768):
    part769 = max(x768, 10)
    tmp770 = min((67 // (36 or 1)), max(37, k767))
    for i771 in range(5):
        x768 -= ((48 // (6 or 1)) + (70 + x768))
        x768 -= ((90 - k767) + tmp770)
    return x768


def calc772(x773, x774):
    step775 = max((x773 // (x774 or 1)), x774)
    x774 += max((step775 // (x774 or 1)), (x774 % (step775 or 1)))
    if (56 + step775) <= (x773 + 18):
        x774 += (min(x773, step775) // (x774 or 1))
        step775 += (min(79, 76) + step775)
    x774 += max((71 // (step775 or 1)), (31 % (x774 or 1)))
    return (max(12, 91) * min(x773, 23))


def calc776(b777):
    if (b777 % (78 or 1)) != (b777 * b777):
        part778 = b777
        b777 -= ((b777 * 68) - part778)
    return ((b777 * 19) % ((b777 + b777) or 1))


def calc779(k780, x781):
    x781 -= ((66 - 9) % ((x781 // (x781 or 1)) or 1))
    step782 = 57
    step782 += max(40, step782)
    val783 = ((step782 - 2) - 15)
    return (x781 // (x781 or 1))


def calc784(k785, x786):
    mix787 = min((k785 + 74), (46 * x786))
    mix787 += ((65 - 12) % ((mix787 * 89) or 1))
    mix787 *= x786
    x786 += (min(75, 60) * max(k785, 85))
    return min((60 * k785), (x786 - 54))


def calc788(b789, k790, b791):
    tmp792 = 88
    tmp792 -= ((tmp792 + 45) // ((b789 // (k790 or 1)) or 1))
    b789 -= 81
    tmp792 -= max((b791 // (tmp792 or 1)), (tmp792 + 68))
    val793 = 90
    return (min(69, k790) * max(k790, b791))


def calc794(n795, a796):
    acc797 = ((77 + a796) % (7 or 1))
    for i798 in range(3):
        acc797 += max(acc797, min(21, i798))
        a796 *= (min(n795, n795) + min(8, 44))
    part799 = (max(18, acc797) - 68)
    return ((a796 - n795) // (min(94, n795) or 1))


def calc800(n801, n802, x803):
    x803 -= 1
    val804 = max(n802, (n802 - 16))
    val804 += ((n802 + val804) // (max(64, n801) or 1))
    val804 *= (min(n801, n801) % (96 or 1))
    n802 *= (max(85, 93) % ((n802 % (val804 or 1)) or 1))
    return ((4 - n801) * 60)


def calc805(b806):
    tmp807 = 75
    for i808 in range(5):
        tmp807 *= (max(30, tmp807) - tmp807)
        i808 += b806
    step809 = ((tmp807 - 89) - (36 * 83))
    return (max(48, 31) % ((b806 // (18 or 1)) or 1))


def calc810(a811, a812):
    a812 -= a811
    mix813 = ((56 * a812) // (44 or 1))
    mix813 += ((a811 % (64 or 1)) - max(mix813, a812))
    a812 += min((a811 - 58), (67 + 62))
    mix814 = ((94 % (a811 or 1)) + a812)
    mix813 *= ((79 - a811) % ((mix814 * a811) or 1))
    return ((a811 * a811) + (30 + a812))


def calc815(n816, b817):
    n816 -= (min(73, 2) + (36 + n816))
    step818 = 97
    val819 = ((82 * 42) * (step818 % (32 or 1)))
    val820 = ((36 - 44) * (62 * b817))
    for i821 in range(8):
        step818 -= ((85 + i821) + 36)
    return b817


def calc822(b823):
    if 35 > (18 * 21):
        b823 -= ((83 // (56 or 1)) + max(93, 40))
    b823 -= (70 % ((b823 + b823) or 1))
    part824 = 71
    return (b823 - (33 // (b823 or 1)))


def calc825(a826, b827, b828):
    step829 = ((b828 % (b827 or 1)) + a826)
    if (a826 % (a826 or 1)) != (b827 + 76):
        a826 *= b828
        part830 = ((a826 // (97 or 1)) * (b827 * 26))
    else:
        b828 += (5 % (b828 or 1))
    return 43


def calc831(a832, k833):
    k833 *= a832
    k833 += (k833 % ((66 * k833) or 1))
    if a832 != (54 % (a832 or 1)):
        a832 -= (16 % ((k833 // (a832 or 1)) or 1))
        a832 += (3 % ((58 - 76) or 1))
    else:
        k833 += (k833 * min(a832, 63))
    return 27


def calc834(n835, n836, b837):
    n836 *= (82 - (71 - n836))
    mix838 = ((16 // (b837 or 1)) % (b837 or 1))
    acc839 = b837
    mix838 -= 1
    part840 = ((56 + b837) % (max(74, mix838) or 1))
    return 26


def calc841(b842):
    if max(5, b842) < max(62, b842):
        tmp843 = b842
        b842 *= (min(b842, tmp843) % ((35 + tmp843) or 1))
    else:
        val844 = (b842 % (min(50, b842) or 1))
    val845 = 28
    return b842


def calc846(x847):
    val848 = x847
    x847 += (min(40, val848) // (min(val848, 7) or 1))
    val848 += val848
    x847 *= val848
    return (max(x847, 57) // ((x847 % (x847 or 1)) or 1))


def calc849(b850):
    if (b850 + 60) != (b850 - b850):
        part851 = b850
    else:
        tmp852 = ((39 - b850) // ((b850 // (b850 or 1)) or 1))
    b850 *= ((b850 % (b850 or 1)) % ((b850 // (b850 or 1)) or 1))
    return b850


def calc853(a854, k855, k856):
    tmp857 = 49
    k855 -= 58
    val858 = ((5 // (tmp857 or 1)) * tmp857)
    step859 = ((k856 - a854) * (k856 % (14 or 1)))
    step859 -= ((k856 * a854) // ((val858 % (88 or 1)) or 1))
    return a854


def calc860(x861):
    for i862 in range(3):
        i862 -= 58
    step863 = ((23 % (x861 or 1)) * x861)
    x861 += ((x861 + 61) - (x861 + 26))
    return min((x861 % (39 or 1)), x861)


def calc864(n865, a866, a867):
    acc868 = ((a866 * 4) % (a867 or 1))
    if (a866 // (a867 or 1)) == (a866 + a866):
        a867 -= ((76 + a866) * a867)
        part869 = ((n865 - 69) // (max(52, a866) or 1))
    else:
        acc868 *= min((n865 + a866), acc868)
    val870 = ((65 + a866) - (a866 // (n865 or 1)))
    return ((79 // (40 or 1)) * n865)


def calc871(b872):
    val873 = max((b872 - 64), max(39, 50))
    b872 += ((val873 * 34) + max(13, b872))
    if val873 <= val873:
        b872 -= max(max(val873, val873), (val873 * b872))
        b872 += ((val873 - b872) - max(9, 1))
    val873 += max((26 + b872), (b872 // (67 or 1)))
    return ((b872 % (b872 or 1)) % ((58 % (9 or 1)) or 1))


def calc874(x875):
    x875 += ((x875 - 20) - (x875 * x875))
    if (x875 + x875) == 83:
        mix876 = (42 + (39 // (29 or 1)))
    else:
        acc877 = x875
    x875 -= 9
    mix878 = (x875 * (x875 + x875))
    return (x875 % (max(x875, x875) or 1))


def calc879(n880, a881):
    step882 = 28
    if (4 - 9) < step882:
        part883 = ((80 // (step882 or 1)) * step882)
        step882 -= ((a881 + 90) - (n880 % (n880 or 1)))
    return min((54 % (n880 or 1)), (n880 * 76))


def calc884(k885, a886):
    a886 *= k885
    a886 *= 63
    tmp887 = a886
    tmp888 = 79
    return ((50 * 91) // ((16 // (67 or 1)) or 1))


def calc889(b890, a891):
    part892 = 28
    val893 = a891
    mix894 = ((16 * part892) + (a891 % (a891 or 1)))
    part895 = ((a891 * 47) - 63)
    tmp896 = b890
    acc897 = min((tmp896 // (tmp896 or 1)), 43)
    return 95


def calc898(x899, b900, n901):
    for i902 in range(5):
        x899 -= (min(b900, b900) + 21)
    step903 = b900
    step904 = ((n901 // (b900 or 1)) + (58 + b900))
    return (75 + n901)
