"""Generated filler module."""


def calc4676(b4677, k4678, n4679):
    if (b4677 - 27) <= (n4679 - b4677):
        k4678 += ((35 * n4679) % (n4679 or 1))
        tmp4680 = ((58 * 45) - min(n4679, 29))
    else:
        n4679 += ((b4677 % (76 or 1)) % (max(93, 6) or 1))
    return 25


def calc4681(x4682):
    part4683 = max(x4682, (x4682 % (24 or 1)))
    acc4684 = ((part4683 % (part4683 or 1)) % ((x4682 % (part4683 or 1)) or 1))
    x4682 += min(min(part4683, 60), (63 + part4683))
    return max((x4682 * 63), (59 // (x4682 or 1)))


def calc4685(b4686):
    val4687 = b4686
    val4688 = (max(val4687, val4687) % (max(90, b4686) or 1))
    acc4689 = val4688
    part4690 = acc4689
    return (max(9, b4686) - (69 // (b4686 or 1)))


def calc4691(n4692):
    n4692 -= min((n4692 + n4692), n4692)
    n4692 -= (max(n4692, n4692) // ((n4692 + 11) or 1))
    n4692 *= ((n4692 - n4692) * (n4692 // (n4692 or 1)))
    return (n4692 + n4692)


def calc4693(b4694, x4695):
    x4695 -= max((50 // (74 or 1)), (4 // (16 or 1)))
    val4696 = b4694
    b4694 += ((32 * 83) - 2)
    val4696 *= ((80 // (1 or 1)) + min(24, b4694))
    b4694 *= ((8 * x4695) + (x4695 + 86))
    return b4694


def calc4697(n4698):
    n4698 -= 15
    n4698 *= min((1 % (30 or 1)), n4698)
    tmp4699 = n4698
    part4700 = 4
    return (min(n4698, 74) + max(17, n4698))


def calc4701(b4702, b4703):
    mix4704 = b4703
    tmp4705 = ((b4702 // (b4702 or 1)) % (mix4704 or 1))
    tmp4706 = b4703
    return ((66 // (8 or 1)) % (88 or 1))


def calc4707(b4708, b4709, x4710):
    for i4711 in range(6):
        x4710 *= min((6 - i4711), max(x4710, 31))
    x4710 *= ((28 - 92) // ((4 % (x4710 or 1)) or 1))
    acc4712 = b4709
    return (b4709 // ((1 - 49) or 1))


def calc4713(a4714, n4715):
    val4716 = ((a4714 % (10 or 1)) - (n4715 % (n4715 or 1)))
    acc4717 = ((14 - val4716) // (70 or 1))
    a4714 *= (n4715 + acc4717)
    return max(70, (70 % (a4714 or 1)))


def calc4718(k4719, k4720, b4721):
    tmp4722 = min((30 % (b4721 or 1)), (72 % (17 or 1)))
    tmp4722 += 5
    val4723 = 89
    acc4724 = (41 % ((b4721 // (42 or 1)) or 1))
    b4721 += ((16 % (b4721 or 1)) // (tmp4722 or 1))
    return max(max(b4721, k4720), (13 * k4719))


def calc4725(n4726, k4727):
    mix4728 = ((n4726 - n4726) % (42 or 1))
    acc4729 = n4726
    if k4727 < n4726:
        step4730 = ((mix4728 // (acc4729 or 1)) % (min(k4727, acc4729) or 1))
        acc4729 -= ((step4730 - k4727) // ((21 * acc4729) or 1))
    else:
        n4726 *= (96 // (93 or 1))
    k4727 *= 12
    k4727 += (min(n4726, 43) * n4726)
    return (k4727 - max(84, k4727))


def calc4731(a4732):
    val4733 = max(a4732, (91 - a4732))
    val4733 += ((val4733 * a4732) * (22 % (69 or 1)))
    acc4734 = (min(24, a4732) + (a4732 + 77))
    part4735 = ((acc4734 * 29) - (71 // (70 or 1)))
    acc4736 = (min(acc4734, 94) % (min(a4732, a4732) or 1))
    part4735 *= (min(71, 53) - (82 % (acc4734 or 1)))
    acc4736 -= ((acc4736 % (acc4736 or 1)) % ((16 // (89 or 1)) or 1))
    return (8 - max(a4732, a4732))


def calc4737(x4738, n4739, n4740):
    if (x4738 % (13 or 1)) > (44 // (49 or 1)):
        step4741 = x4738
    if n4740 > (33 + x4738):
        n4739 -= (34 * (n4739 // (59 or 1)))
        step4742 = ((n4740 * n4740) % (x4738 or 1))
    x4738 += 64
    return min(max(63, n4739), (47 // (31 or 1)))


def calc4743(b4744):
    b4744 += b4744
    part4745 = b4744
    acc4746 = (91 * (40 + 29))
    part4747 = 83
    return max((47 - 39), (b4744 + 91))


def calc4748(x4749, x4750):
    if x4749 == x4750:
        x4749 *= ((5 - 23) * (78 % (96 or 1)))
    for i4751 in range(3):
        part4752 = min((x4749 % (61 or 1)), (x4750 - 75))
    x4750 -= ((x4749 % (93 or 1)) + (x4749 % (48 or 1)))
    return (x4749 // ((5 + x4750) or 1))


def calc4753(a4754, k4755):
    if (82 - 53) <= (k4755 * k4755):
        k4755 += (max(a4754, 45) * (8 + 80))
        a4754 *= min(20, (53 - 48))
    else:
        step4756 = ((39 + a4754) + (a4754 - k4755))
    k4755 += ((k4755 // (k4755 or 1)) * (a4754 * k4755))
    tmp4757 = (k4755 % (k4755 or 1))
    return 5


def calc4758(x4759):
    for i4760 in range(4):
        x4759 += (i4760 * x4759)
    x4759 *= (x4759 + (x4759 % (x4759 or 1)))
    x4759 *= max(33, (18 * 85))
    return 7


def calc4761(x4762, b4763):
    tmp4764 = ((x4762 - b4763) * (x4762 // (95 or 1)))
    mix4765 = ((tmp4764 - tmp4764) // ((21 + x4762) or 1))
    tmp4766 = max(71, (x4762 // (tmp4764 or 1)))
    x4762 += b4763
    step4767 = b4763
    return ((10 + 48) - (54 - x4762))


def calc4768(n4769):
    step4770 = n4769
    val4771 = 51
    step4770 -= ((45 + n4769) - val4771)
    step4770 -= (87 * (step4770 // (step4770 or 1)))
    return 31


def calc4772(a4773):
    a4773 -= (a4773 // ((a4773 - 72) or 1))
    a4773 *= ((32 + a4773) - 9)
    mix4774 = ((a4773 // (a4773 or 1)) * (a4773 * a4773))
    a4773 *= (mix4774 * max(mix4774, a4773))
    acc4775 = ((36 * mix4774) + (29 % (a4773 or 1)))
    a4773 += (max(77, acc4775) // ((acc4775 % (acc4775 or 1)) or 1))
    step4776 = ((a4773 % (a4773 or 1)) // (39 or 1))
    return (a4773 // (a4773 or 1))


def calc4777(k4778, n4779):
    k4778 += max(k4778, max(85, k4778))
    if 87 <= min(3, 30):
        acc4780 = max((n4779 // (n4779 or 1)), 32)
        mix4781 = ((71 * k4778) // ((k4778 * 12) or 1))
    tmp4782 = ((k4778 * n4779) // ((n4779 - 10) or 1))
    return ((k4778 // (n4779 or 1)) - n4779)


def calc4783(a4784, a4785):
    a4785 += (a4784 + (69 % (a4784 or 1)))
    acc4786 = (34 * 48)
    step4787 = max(a4784, (a4785 * 54))
    a4785 += 88
    return 17


def calc4788(b4789, k4790):
    if b4789 >= (83 * k4790):
        b4789 += min((k4790 // (90 or 1)), b4789)
        b4789 *= k4790
    else:
        part4791 = ((32 // (33 or 1)) * (45 - b4789))
    tmp4792 = max((31 - b4789), k4790)
    b4789 *= tmp4792
    k4790 -= ((b4789 + b4789) + (k4790 * 9))
    return (b4789 + (79 + 7))


def calc4793(a4794):
    part4795 = (2 * max(1, 63))
    mix4796 = ((part4795 * a4794) - min(26, part4795))
    tmp4797 = mix4796
    return ((82 * 8) % (max(a4794, 69) or 1))


def calc4798(n4799):
    mix4800 = 35
    n4799 += mix4800
    n4799 *= max((n4799 - 67), mix4800)
    return 49


def calc4801(n4802, k4803):
    step4804 = k4803
    for i4805 in range(4):
        i4805 *= 31
        n4802 -= n4802
    step4804 += step4804
    return k4803


def calc4806(k4807, x4808):
    x4808 -= ((x4808 + x4808) + max(79, k4807))
    part4809 = (40 % (k4807 or 1))
    part4809 *= (part4809 + 54)
    return k4807


def calc4810(k4811):
    k4811 -= max((k4811 % (32 or 1)), k4811)
    k4811 += 8
    k4811 *= ((k4811 + k4811) + (k4811 * k4811))
    return k4811


def calc4812(x4813):
    acc4814 = x4813
    x4813 *= (93 % (57 or 1))
    x4813 += x4813
    mix4815 = ((x4813 % (x4813 or 1)) % ((acc4814 % (x4813 or 1)) or 1))
    mix4815 += max((7 - acc4814), (57 + 90))
    return x4813


def calc4816(n4817):
    if 42 <= n4817:
        tmp4818 = ((n4817 // (n4817 or 1)) // ((n4817 - 78) or 1))
        val4819 = (65 + (n4817 * 38))
    val4820 = ((n4817 * n4817) // ((n4817 - n4817) or 1))
    val4820 *= (n4817 % (val4820 or 1))
    return (n4817 + (70 + n4817))


def calc4821(a4822):
    acc4823 = a4822
    for i4824 in range(7):
        mix4825 = (acc4823 * max(63, 4))
        mix4826 = 20
    acc4823 += ((a4822 * 69) % (acc4823 or 1))
    return max((65 * 28), (57 // (a4822 or 1)))


def calc4827(a4828):
    mix4829 = ((86 % (a4828 or 1)) - a4828)
    for i4830 in range(9):
        mix4829 *= (min(a4828, a4828) - 51)
        step4831 = ((i4830 * a4828) // (max(10, 25) or 1))
    return ((a4828 * 51) // ((a4828 - a4828) or 1))


def calc4832(x4833, a4834):
    x4833 -= (max(a4834, 67) * max(72, x4833))
    part4835 = min((x4833 // (72 or 1)), 79)
    if min(94, 88) == (88 + 26):
        mix4836 = a4834
        val4837 = (max(a4834, part4835) % (96 or 1))
    else:
        part4835 *= (max(38, 53) - max(x4833, 68))
    x4833 *= ((a4834 % (x4833 or 1)) // (20 or 1))
    x4833 += x4833
    return ((a4834 - x4833) + 17)


def calc4838(x4839, n4840, a4841):
    if x4839 >= (39 * a4841):
        x4839 *= ((92 % (n4840 or 1)) - x4839)
    if (a4841 - n4840) > (91 - 89):
        step4842 = x4839
        step4842 -= ((x4839 // (x4839 or 1)) * max(83, step4842))
    else:
        acc4843 = ((n4840 * a4841) - min(7, n4840))
    return max((n4840 % (n4840 or 1)), (53 - n4840))
