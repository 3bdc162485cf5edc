"""Generated filler module."""


def calc3601(b3602):
    for i3603 in range(2):
        i3603 += max((7 * b3602), 14)
        acc3604 = 46
    tmp3605 = 95
    tmp3605 *= ((29 * tmp3605) // ((66 % (tmp3605 or 1)) or 1))
    val3606 = (tmp3605 * 46)
    return 68


def calc3607(n3608, k3609):
    step3610 = 41
    if 20 < max(k3609, step3610):
        n3608 += min(18, 73)
        k3609 += (n3608 - (k3609 - 9))
    else:
        step3611 = step3610
    return (52 % (51 or 1))


def calc3612(x3613, n3614):
    x3613 += ((n3614 // (n3614 or 1)) % (min(25, x3613) or 1))
    x3613 -= 26
    n3614 *= ((x3613 + 40) % ((x3613 + x3613) or 1))
    return (max(33, x3613) % ((34 + n3614) or 1))


def calc3615(b3616):
    tmp3617 = ((17 * b3616) % ((68 - b3616) or 1))
    tmp3617 -= (66 - tmp3617)
    if 14 <= (b3616 + 87):
        tmp3618 = min(61, 34)
    else:
        b3616 += (6 % (b3616 or 1))
    return (min(b3616, b3616) % (b3616 or 1))


def calc3619(n3620, n3621):
    val3622 = ((n3620 // (25 or 1)) * (n3621 % (17 or 1)))
    part3623 = max(n3620, (14 // (val3622 or 1)))
    val3624 = ((n3621 // (75 or 1)) - max(89, n3621))
    part3625 = ((val3624 + 65) + (40 + 3))
    val3624 += ((67 - val3622) * min(val3624, part3625))
    n3620 += max(max(82, n3620), max(part3625, 86))
    return 57


def calc3626(b3627):
    b3627 *= ((b3627 - b3627) + (26 * b3627))
    b3627 -= (b3627 + b3627)
    b3627 -= b3627
    acc3628 = max(b3627, (b3627 % (54 or 1)))
    return (96 % ((b3627 % (53 or 1)) or 1))


def calc3629(b3630):
    b3630 += (51 % (min(b3630, b3630) or 1))
    for i3631 in range(8):
        b3630 += i3631
        i3631 *= (max(b3630, 14) - (b3630 + b3630))
    tmp3632 = ((28 + 16) - max(b3630, 81))
    tmp3632 -= 76
    tmp3632 += max(87, (tmp3632 + tmp3632))
    return (b3630 - b3630)


def calc3633(b3634, b3635):
    step3636 = (b3635 + (33 * 56))
    if (91 * 86) > (3 % (b3635 or 1)):
        part3637 = 30
        part3637 += min((35 // (b3634 or 1)), (50 * 91))
    else:
        step3638 = step3636
    tmp3639 = step3636
    b3635 *= b3635
    return 12


def calc3640(a3641, a3642, b3643):
    part3644 = (a3642 * (b3643 * 68))
    if max(9, 8) != max(a3642, 1):
        part3644 -= max((a3642 % (50 or 1)), (61 + b3643))
    else:
        val3645 = max(max(30, 57), max(part3644, b3643))
    b3643 *= b3643
    return (a3642 % ((a3642 // (a3641 or 1)) or 1))


def calc3646(b3647, a3648):
    part3649 = ((38 + b3647) + 9)
    mix3650 = max((part3649 % (part3649 or 1)), (a3648 - 46))
    mix3651 = (part3649 // ((b3647 % (61 or 1)) or 1))
    a3648 *= ((part3649 - 97) * 28)
    mix3651 -= 32
    return min((34 % (b3647 or 1)), 88)


def calc3652(n3653):
    if n3653 != 59:
        n3653 -= ((95 // (n3653 or 1)) - min(n3653, n3653))
        n3653 += 87
    n3653 += 92
    return 91


def calc3654(a3655, n3656, a3657):
    tmp3658 = (min(75, 59) // (36 or 1))
    if n3656 < (a3655 * tmp3658):
        tmp3659 = (min(a3657, tmp3658) + a3655)
    val3660 = a3657
    tmp3661 = (n3656 + (n3656 + n3656))
    return a3655


def calc3662(k3663):
    k3663 -= max(min(k3663, k3663), (k3663 - k3663))
    acc3664 = (k3663 % ((3 % (k3663 or 1)) or 1))
    if k3663 < (k3663 * 36):
        tmp3665 = ((k3663 // (k3663 or 1)) // (50 or 1))
        k3663 += 57
    else:
        k3663 += ((16 // (14 or 1)) + 39)
    part3666 = ((46 // (acc3664 or 1)) - (93 + 11))
    k3663 *= min((acc3664 + k3663), (71 % (93 or 1)))
    return (min(k3663, 68) % ((k3663 - k3663) or 1))


def calc3667(a3668, k3669):
    k3669 += a3668
    a3668 += ((15 * a3668) + (k3669 * a3668))
    if (25 * k3669) <= min(k3669, 52):
        a3668 -= (max(74, 43) // (7 or 1))
    return min(min(76, a3668), 26)


def calc3670(n3671):
    if (n3671 * n3671) != min(68, n3671):
        n3671 += 26
        n3671 -= (n3671 * (n3671 % (n3671 or 1)))
    else:
        n3671 -= ((n3671 % (n3671 or 1)) - (n3671 + 45))
    step3672 = 50
    return (max(n3671, 57) + (68 - n3671))


def calc3673(k3674, x3675, x3676):
    k3674 -= ((k3674 // (x3676 or 1)) % ((20 + 31) or 1))
    mix3677 = (63 % ((x3675 % (x3676 or 1)) or 1))
    x3676 += mix3677
    return min(x3676, (66 // (61 or 1)))


def calc3678(b3679, n3680, x3681):
    part3682 = max((x3681 % (x3681 or 1)), b3679)
    tmp3683 = part3682
    tmp3684 = ((n3680 % (3 or 1)) * 90)
    return ((7 // (n3680 or 1)) % ((n3680 - 9) or 1))


def calc3685(a3686, x3687):
    a3686 -= ((x3687 // (73 or 1)) % ((1 + a3686) or 1))
    x3687 += a3686
    val3688 = ((x3687 + 84) % ((a3686 - a3686) or 1))
    step3689 = ((16 + val3688) + min(a3686, a3686))
    step3689 += ((val3688 // (a3686 or 1)) // (max(69, 47) or 1))
    mix3690 = step3689
    return (max(x3687, 29) * (94 - x3687))


def calc3691(n3692, x3693, a3694):
    step3695 = max(max(x3693, x3693), (n3692 - 84))
    x3693 -= (max(44, x3693) + (n3692 - 19))
    val3696 = a3694
    n3692 -= max(step3695, (89 % (61 or 1)))
    x3693 += ((x3693 + 89) + (step3695 + step3695))
    return n3692


def calc3697(a3698):
    if (24 - 82) >= a3698:
        a3698 *= 33
        mix3699 = min((a3698 * a3698), min(a3698, 26))
    a3698 -= ((a3698 * 70) * (45 // (a3698 or 1)))
    a3698 -= 1
    a3698 *= a3698
    return (a3698 % (a3698 or 1))


def calc3700(n3701):
    if n3701 >= (n3701 // (41 or 1)):
        n3701 -= n3701
        n3701 += n3701
    else:
        n3701 -= (58 % (max(74, n3701) or 1))
    n3701 -= 12
    n3701 += ((n3701 // (70 or 1)) // ((n3701 + 57) or 1))
    return ((55 - n3701) * 28)


def calc3702(a3703):
    a3703 += (30 % (71 or 1))
    mix3704 = a3703
    a3703 += 96
    tmp3705 = (mix3704 + max(a3703, 27))
    tmp3706 = (81 * mix3704)
    tmp3705 += 74
    return (94 % (a3703 or 1))


def calc3707(a3708, b3709, a3710):
    val3711 = ((15 + 61) + 69)
    step3712 = 25
    acc3713 = max((val3711 - 8), (a3710 % (step3712 or 1)))
    part3714 = val3711
    step3715 = min((56 * 8), (26 // (acc3713 or 1)))
    val3716 = max((acc3713 % (a3710 or 1)), (step3715 + b3709))
    val3716 -= (part3714 // (val3716 or 1))
    return a3710


def calc3717(k3718, x3719, x3720):
    if (69 * k3718) > (67 % (k3718 or 1)):
        x3719 *= ((33 * 42) // (max(84, x3719) or 1))
        mix3721 = min(x3719, max(70, x3720))
    x3720 *= 74
    x3720 += ((38 * 21) % ((x3719 - x3720) or 1))
    k3718 *= 71
    return (k3718 // (min(x3720, k3718) or 1))


def calc3722(x3723, k3724):
    k3724 -= ((35 * 57) // (39 or 1))
    x3723 += ((54 + 75) // ((66 // (k3724 or 1)) or 1))
    step3725 = 35
    for i3726 in range(5):
        step3725 -= 6
        mix3727 = k3724
    return ((x3723 // (24 or 1)) % (max(x3723, k3724) or 1))


def calc3728(k3729, x3730):
    for i3731 in range(6):
        k3729 += ((69 + 69) + (28 + x3730))
        step3732 = ((i3731 % (42 or 1)) - 31)
    mix3733 = min(40, 49)
    tmp3734 = ((k3729 // (k3729 or 1)) % ((k3729 // (88 or 1)) or 1))
    tmp3734 += max((59 * 24), (k3729 - 42))
    acc3735 = (max(69, 47) * (k3729 + 35))
    return (x3730 - (x3730 % (30 or 1)))


def calc3736(x3737, x3738, k3739):
    acc3740 = ((x3738 * x3737) - (x3737 + 57))
    step3741 = ((22 * k3739) // (min(57, 67) or 1))
    k3739 *= ((15 - 49) - 39)
    tmp3742 = 58
    step3741 += (min(step3741, x3738) * (k3739 - x3737))
    k3739 -= ((x3738 * step3741) + (5 % (49 or 1)))
    tmp3742 -= x3737
    return ((x3737 + x3738) + x3737)


def calc3743(a3744, x3745):
    tmp3746 = (max(73, 58) // (64 or 1))
    a3744 *= a3744
    tmp3746 -= (a3744 + max(a3744, tmp3746))
    return a3744


def calc3747(k3748, n3749, a3750):
    mix3751 = ((a3750 + 22) % (k3748 or 1))
    tmp3752 = 63
    step3753 = max((mix3751 * 15), n3749)
    return ((a3750 // (42 or 1)) * (k3748 // (k3748 or 1)))


def calc3754(b3755, a3756, a3757):
    for i3758 in range(5):
        part3759 = i3758
    return (a3757 // ((b3755 + 3) or 1))


def calc3760(k3761, a3762):
    k3761 += 3
    step3763 = k3761
    mix3764 = 63
    return min((73 + 30), 12)


def calc3765(k3766):
    k3766 *= max(57, (k3766 % (56 or 1)))
    k3766 += k3766
    k3766 *= k3766
    tmp3767 = ((k3766 % (26 or 1)) % ((71 + k3766) or 1))
    tmp3767 *= (tmp3767 // (86 or 1))
    return ((k3766 % (k3766 or 1)) - (44 % (89 or 1)))
