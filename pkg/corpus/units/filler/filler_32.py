"""Generated filler module."""


def calc5745(b5746, n5747):
    n5747 *= b5746
    val5748 = max(min(b5746, n5747), (n5747 * n5747))
    acc5749 = (min(b5746, n5747) % (n5747 or 1))
    b5746 -= min((n5747 // (acc5749 or 1)), 9)
    if (55 % (88 or 1)) == (23 * b5746):
        mix5750 = ((b5746 % (78 or 1)) % (71 or 1))
    return (b5746 * (n5747 + b5746))


def calc5751(a5752, b5753, k5754):
    for i5755 in range(8):
        b5753 += (i5755 % ((a5752 // (68 or 1)) or 1))
    return (k5754 + (b5753 % (b5753 or 1)))


def calc5756(b5757, a5758, k5759):
    a5758 *= max((k5759 - k5759), b5757)
    a5758 *= (min(30, b5757) + (k5759 * 97))
    tmp5760 = ((k5759 - k5759) - (84 * 25))
    return max(10, (a5758 % (b5757 or 1)))


def calc5761(x5762, n5763):
    for i5764 in range(7):
        acc5765 = ((n5763 % (3 or 1)) * (60 - n5763))
        tmp5766 = (min(22, acc5765) * (x5762 // (x5762 or 1)))
    step5767 = (min(93, 60) // ((n5763 - 19) or 1))
    mix5768 = (89 + n5763)
    return ((x5762 - x5762) * (n5763 * 3))


def calc5769(x5770, a5771):
    if (a5771 * x5770) <= min(a5771, 11):
        val5772 = ((7 - a5771) + (a5771 + 65))
        acc5773 = max(min(val5772, 21), (a5771 - x5770))
    a5771 += max((55 + 9), (a5771 - x5770))
    a5771 -= ((x5770 // (a5771 or 1)) - min(x5770, a5771))
    x5770 += x5770
    x5770 -= (x5770 + (x5770 - a5771))
    return (85 % (x5770 or 1))


def calc5774(a5775):
    tmp5776 = a5775
    a5775 *= 70
    acc5777 = (54 * (a5775 - a5775))
    acc5778 = 5
    acc5778 *= max((73 // (a5775 or 1)), tmp5776)
    return (a5775 + (67 - a5775))


def calc5779(x5780):
    mix5781 = ((x5780 % (x5780 or 1)) + 27)
    mix5782 = 65
    step5783 = x5780
    part5784 = ((73 * step5783) * min(step5783, 39))
    mix5785 = max((x5780 % (step5783 or 1)), mix5782)
    tmp5786 = min(min(step5783, mix5781), 66)
    acc5787 = min(min(33, step5783), part5784)
    return (x5780 % ((x5780 - x5780) or 1))


def calc5788(k5789, a5790):
    if a5790 == min(39, k5789):
        k5789 *= a5790
    else:
        a5790 *= ((a5790 - k5789) % ((a5790 * a5790) or 1))
    a5790 -= ((30 * 68) % (63 or 1))
    return ((54 % (48 or 1)) // (k5789 or 1))


def calc5791(n5792, n5793):
    if (n5793 // (n5792 or 1)) != (73 // (5 or 1)):
        n5793 *= min((46 // (n5792 or 1)), 20)
    n5793 -= (min(3, n5793) % (max(78, n5793) or 1))
    n5793 *= (n5792 - (59 // (75 or 1)))
    n5793 -= ((86 // (42 or 1)) * (34 + 33))
    return (38 - (47 // (n5793 or 1)))


def calc5794(k5795, a5796):
    val5797 = min((k5795 + 90), k5795)
    if (k5795 * val5797) != a5796:
        part5798 = 4
        val5797 += k5795
    else:
        k5795 -= (k5795 * (val5797 // (k5795 or 1)))
    val5799 = val5797
    part5800 = ((58 - val5797) % ((72 - 37) or 1))
    part5800 *= ((k5795 // (a5796 or 1)) + (a5796 * 25))
    return k5795


def calc5801(n5802, k5803, x5804):
    step5805 = ((n5802 % (x5804 or 1)) - (k5803 * n5802))
    if (n5802 % (35 or 1)) >= (18 * step5805):
        n5802 -= step5805
        val5806 = (n5802 * min(x5804, 17))
    else:
        step5807 = 30
    k5803 *= ((x5804 % (46 or 1)) % ((step5805 * 14) or 1))
    return min((40 % (78 or 1)), (22 // (76 or 1)))


def calc5808(k5809):
    if (2 + 37) == (4 // (k5809 or 1)):
        step5810 = (55 + 27)
        step5811 = step5810
    k5809 *= max(k5809, 51)
    k5809 *= (max(15, 25) % ((35 // (k5809 or 1)) or 1))
    return (min(94, 16) + max(17, 10))


def calc5812(k5813, b5814, a5815):
    k5813 += (84 * a5815)
    val5816 = a5815
    tmp5817 = min((val5816 + val5816), 93)
    for i5818 in range(7):
        k5813 *= k5813
        tmp5819 = ((a5815 // (tmp5817 or 1)) + k5813)
    mix5820 = a5815
    return ((b5814 // (6 or 1)) % ((b5814 + b5814) or 1))


def calc5821(x5822):
    for i5823 in range(6):
        i5823 -= max((56 * 10), (x5822 % (i5823 or 1)))
    x5822 -= max((35 - 35), (28 // (x5822 or 1)))
    acc5824 = x5822
    return x5822


def calc5825(n5826):
    for i5827 in range(5):
        tmp5828 = ((i5827 - 47) * (12 - 27))
        part5829 = ((i5827 - i5827) % (min(63, 26) or 1))
    n5826 *= n5826
    return n5826


def calc5830(x5831, b5832):
    if (x5831 // (x5831 or 1)) >= (72 * 16):
        tmp5833 = b5832
    else:
        b5832 += ((x5831 % (b5832 or 1)) - (x5831 % (b5832 or 1)))
    return 11


def calc5834(x5835, x5836):
    if (x5835 // (x5836 or 1)) == (25 - x5835):
        x5835 += max((x5836 * x5836), x5835)
    x5835 -= (x5835 // (61 or 1))
    return (min(57, x5835) + max(62, 22))


def calc5837(b5838, b5839, k5840):
    k5840 += (29 - (b5839 - 16))
    val5841 = 93
    acc5842 = b5839
    return max(k5840, (14 + b5838))


def calc5843(k5844, k5845, n5846):
    k5845 *= min((k5844 % (k5845 or 1)), min(k5845, 67))
    step5847 = ((k5845 % (n5846 or 1)) % ((18 % (k5844 or 1)) or 1))
    mix5848 = max((k5845 % (n5846 or 1)), k5844)
    n5846 -= min(min(step5847, 51), max(12, k5844))
    return min(n5846, min(n5846, n5846))


def calc5849(a5850, n5851):
    if min(78, n5851) < (52 - a5850):
        a5850 -= (34 // (min(n5851, n5851) or 1))
    return ((a5850 - a5850) - 62)


def calc5852(n5853):
    mix5854 = ((n5853 + n5853) // ((n5853 + n5853) or 1))
    mix5854 += (min(34, n5853) % ((84 // (mix5854 or 1)) or 1))
    acc5855 = (n5853 * (66 % (mix5854 or 1)))
    part5856 = (min(mix5854, mix5854) // ((15 - 20) or 1))
    return ((n5853 % (n5853 or 1)) * min(48, n5853))


def calc5857(x5858, b5859, x5860):
    if (x5860 * 23) == b5859:
        x5858 *= (max(13, x5858) // ((x5858 % (49 or 1)) or 1))
    else:
        acc5861 = ((31 + 64) % ((b5859 - b5859) or 1))
    part5862 = (min(33, x5858) + (30 * 83))
    val5863 = x5860
    x5860 -= (70 + (x5858 - 74))
    b5859 *= ((x5858 % (val5863 or 1)) + min(b5859, part5862))
    return ((x5858 + 63) * min(82, 20))


def calc5864(a5865, k5866, b5867):
    acc5868 = a5865
    acc5868 -= a5865
    acc5868 *= max((k5866 % (b5867 or 1)), max(a5865, 86))
    b5867 -= ((k5866 + 90) // ((35 % (59 or 1)) or 1))
    acc5868 *= ((acc5868 - 51) % ((a5865 % (20 or 1)) or 1))
    step5869 = 67
    return ((48 * k5866) // (a5865 or 1))


def calc5870(x5871, b5872, k5873):
    if min(46, 97) < 6:
        tmp5874 = 23
    k5873 *= ((24 % (93 or 1)) % ((b5872 % (92 or 1)) or 1))
    return ((b5872 % (29 or 1)) - (k5873 - b5872))


def calc5875(a5876):
    a5876 += a5876
    a5876 += (max(35, a5876) - min(a5876, a5876))
    a5876 += min(a5876, a5876)
    a5876 *= ((5 - a5876) * (a5876 + a5876))
    acc5877 = (min(a5876, 49) * (33 + 6))
    return a5876


def calc5878(x5879):
    mix5880 = min(x5879, max(25, x5879))
    mix5880 -= ((mix5880 // (90 or 1)) + x5879)
    x5879 += min(max(13, 84), (61 + mix5880))
    return max((x5879 % (x5879 or 1)), (x5879 * x5879))


def calc5881(a5882, k5883, x5884):
    part5885 = max((97 - x5884), (a5882 + 26))
    acc5886 = (part5885 * part5885)
    tmp5887 = ((16 + acc5886) - (18 // (x5884 or 1)))
    tmp5888 = ((x5884 * a5882) + a5882)
    acc5889 = ((acc5886 % (acc5886 or 1)) + (acc5886 * x5884))
    acc5890 = ((76 // (22 or 1)) + 25)
    val5891 = max(part5885, (a5882 * 48))
    return (43 + 63)


def calc5892(k5893, x5894):
    if k5893 == x5894:
        x5894 -= (59 * (k5893 * 30))
        part5895 = k5893
    k5893 -= (74 - 55)
    mix5896 = ((79 + x5894) + min(92, x5894))
    k5893 *= 22
    return (min(32, 36) % ((25 * x5894) or 1))


def calc5897(n5898, n5899):
    mix5900 = 58
    mix5900 -= n5898
    part5901 = ((mix5900 * 80) + 19)
    return (min(n5899, 53) * n5899)


def calc5902(a5903, b5904, b5905):
    mix5906 = 65
    val5907 = (mix5906 * (a5903 // (50 or 1)))
    part5908 = 54
    mix5906 += 35
    return (b5904 % ((a5903 * 91) or 1))


def calc5909(x5910, x5911, x5912):
    step5913 = ((x5911 - 26) % (83 or 1))
    x5910 -= (85 + max(47, 31))
    x5912 *= ((x5912 // (step5913 or 1)) * (step5913 + x5912))
    return (8 % (x5911 or 1))


def calc5914(b5915):
    part5916 = (68 % ((b5915 - b5915) or 1))
    if min(39, part5916) <= (32 * b5915):
        b5915 *= part5916
        b5915 *= b5915
    else:
        part5916 += part5916
    b5915 *= part5916
    mix5917 = max(part5916, (14 % (part5916 or 1)))
    mix5917 -= ((b5915 // (54 or 1)) % (mix5917 or 1))
    return (10 // ((b5915 % (31 or 1)) or 1))


def calc5918(b5919, k5920, b5921):
    k5920 *= b5921
    part5922 = (80 % ((4 - 13) or 1))
    step5923 = part5922
    if (b5919 // (65 or 1)) <= (b5921 + step5923):
        val5924 = ((part5922 + 36) * k5920)
    else:
        b5921 += ((10 + 91) % ((part5922 * 81) or 1))
    return ((11 % (b5919 or 1)) - (b5919 % (34 or 1)))
