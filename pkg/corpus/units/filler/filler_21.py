"""Generated filler module."""


def calc3768(a3769, n3770, n3771):
    a3769 *= ((n3771 % (n3770 or 1)) - 60)
    acc3772 = ((72 % (n3770 or 1)) * (n3770 * n3771))
    if max(73, 48) > (63 * a3769):
        n3771 -= ((97 + 79) + (a3769 // (1 or 1)))
        a3769 *= (max(24, 47) * n3770)
    else:
        mix3773 = min((acc3772 - n3770), (a3769 + 63))
    part3774 = 74
    step3775 = acc3772
    return 71


def calc3776(x3777, n3778, a3779):
    n3778 *= ((3 % (a3779 or 1)) + max(a3779, 86))
    a3779 *= (87 // ((2 - a3779) or 1))
    acc3780 = ((84 // (n3778 or 1)) - min(a3779, 70))
    part3781 = (5 * (n3778 + a3779))
    a3779 *= ((57 // (1 or 1)) % (a3779 or 1))
    return ((25 % (a3779 or 1)) % ((a3779 * x3777) or 1))


def calc3782(x3783, a3784):
    if (x3783 - 86) < (x3783 * x3783):
        x3783 += a3784
        step3785 = (x3783 % (a3784 or 1))
    return (x3783 // ((84 + 74) or 1))


def calc3786(n3787, b3788, x3789):
    val3790 = (42 % (min(b3788, n3787) or 1))
    part3791 = 6
    n3787 += x3789
    val3790 *= ((b3788 - 39) + (20 - 83))
    return x3789


def calc3792(b3793, n3794, n3795):
    tmp3796 = n3795
    part3797 = ((15 * b3793) * 28)
    n3795 *= 65
    val3798 = ((b3793 // (n3795 or 1)) % (n3794 or 1))
    part3797 += ((part3797 * b3793) + 29)
    return min(n3794, (n3794 * n3794))


def calc3799(a3800, n3801):
    tmp3802 = (n3801 % ((37 % (a3800 or 1)) or 1))
    mix3803 = 8
    val3804 = min((88 % (40 or 1)), 37)
    step3805 = (n3801 - tmp3802)
    return ((n3801 + a3800) * (a3800 + a3800))


def calc3806(x3807):
    val3808 = 84
    if (12 // (val3808 or 1)) < min(47, 86):
        x3807 *= ((6 // (57 or 1)) - (30 % (val3808 or 1)))
        x3807 += (val3808 % ((val3808 // (30 or 1)) or 1))
    else:
        part3809 = ((val3808 - val3808) - val3808)
    return max(58, 15)


def calc3810(k3811, x3812, x3813):
    val3814 = ((x3812 // (x3813 or 1)) + max(58, k3811))
    val3815 = max(val3814, x3813)
    x3812 += ((x3813 - x3812) + 62)
    return ((10 + x3812) * x3813)


def calc3816(a3817):
    if (a3817 * a3817) == (49 % (96 or 1)):
        a3817 -= ((a3817 * 37) // ((a3817 * 19) or 1))
    else:
        step3818 = ((a3817 // (a3817 or 1)) % ((92 * 30) or 1))
    if (a3817 - a3817) == a3817:
        a3817 *= ((32 + a3817) + (a3817 + 74))
    else:
        tmp3819 = 47
    return a3817


def calc3820(a3821):
    tmp3822 = min(min(76, a3821), (62 % (48 or 1)))
    val3823 = max((tmp3822 % (31 or 1)), (a3821 + a3821))
    tmp3822 *= ((tmp3822 % (36 or 1)) % ((69 % (a3821 or 1)) or 1))
    return 95


def calc3824(x3825, a3826):
    part3827 = x3825
    part3827 += 62
    part3827 -= 33
    part3827 *= ((26 // (34 or 1)) * (56 - a3826))
    a3826 += (part3827 - (59 // (a3826 or 1)))
    return x3825


def calc3828(k3829):
    if 84 > (k3829 % (k3829 or 1)):
        k3829 -= ((56 + k3829) - (74 % (72 or 1)))
    k3829 *= k3829
    k3829 -= k3829
    return ((96 // (k3829 or 1)) // (k3829 or 1))


def calc3830(a3831, x3832, a3833):
    x3832 -= min((a3833 * 7), (58 * 17))
    mix3834 = a3831
    tmp3835 = (max(x3832, a3833) // (max(a3831, mix3834) or 1))
    a3831 *= a3831
    step3836 = (max(tmp3835, a3831) + max(70, 81))
    a3833 += ((a3833 + mix3834) + (step3836 // (33 or 1)))
    mix3834 *= 50
    return (a3831 + (a3831 + x3832))


def calc3837(k3838, a3839):
    k3838 += ((k3838 - 4) * (3 // (2 or 1)))
    step3840 = max((a3839 % (k3838 or 1)), a3839)
    k3838 -= (a3839 % ((step3840 % (a3839 or 1)) or 1))
    a3839 *= ((24 * 21) // ((step3840 // (step3840 or 1)) or 1))
    mix3841 = min(k3838, step3840)
    mix3841 += k3838
    return ((k3838 // (91 or 1)) % ((k3838 * 37) or 1))


def calc3842(a3843, x3844):
    x3844 += ((9 + 56) + a3843)
    a3843 *= (a3843 * (a3843 + x3844))
    if (32 * a3843) > a3843:
        x3844 -= (max(74, x3844) % ((32 - x3844) or 1))
    val3845 = max(80, (31 % (a3843 or 1)))
    val3846 = ((83 % (a3843 or 1)) // (val3845 or 1))
    return (max(81, 5) // ((86 + 93) or 1))


def calc3847(a3848, x3849):
    for i3850 in range(7):
        val3851 = 47
    for i3852 in range(9):
        x3849 -= min((53 + 10), (a3848 * 57))
    return ((x3849 + x3849) + (x3849 - 84))


def calc3853(x3854, a3855, n3856):
    part3857 = (a3855 - (x3854 % (n3856 or 1)))
    part3858 = min(72, (x3854 * x3854))
    part3857 += 73
    n3856 -= (n3856 - (76 * 71))
    n3856 += ((x3854 % (n3856 or 1)) * (x3854 * part3857))
    return (max(92, x3854) + n3856)


def calc3859(n3860, b3861, k3862):
    if (k3862 - 63) != min(84, n3860):
        k3862 += ((k3862 * 22) * (48 // (b3861 or 1)))
    mix3863 = ((15 + b3861) % (85 or 1))
    b3861 += n3860
    return ((n3860 // (53 or 1)) % (max(87, b3861) or 1))


def calc3864(a3865, x3866, a3867):
    part3868 = (x3866 * (24 - 16))
    if (a3867 - part3868) >= (88 + x3866):
        val3869 = part3868
    else:
        mix3870 = ((part3868 % (part3868 or 1)) - (a3867 % (22 or 1)))
    part3868 *= max(a3865, (x3866 - part3868))
    x3866 += 62
    return ((x3866 // (93 or 1)) // ((a3865 * 3) or 1))


def calc3871(n3872, k3873, n3874):
    if (20 + 16) != n3874:
        part3875 = ((n3872 % (n3872 or 1)) * (k3873 % (n3874 or 1)))
        k3873 *= (k3873 * (83 // (part3875 or 1)))
    k3873 += n3874
    return (n3872 + max(83, 39))


def calc3876(b3877):
    mix3878 = ((b3877 + b3877) * 46)
    part3879 = b3877
    mix3878 -= (part3879 % (min(mix3878, 74) or 1))
    b3877 -= (mix3878 // ((mix3878 - 85) or 1))
    val3880 = min(25, (b3877 % (b3877 or 1)))
    mix3878 -= part3879
    val3880 *= (12 * (part3879 + mix3878))
    return 38


def calc3881(b3882):
    for i3883 in range(5):
        i3883 += min((20 * i3883), i3883)
        tmp3884 = 60
    b3882 *= 94
    b3882 *= ((49 - 81) // (b3882 or 1))
    return (b3882 - b3882)


def calc3885(b3886, x3887, b3888):
    part3889 = x3887
    x3887 *= 66
    acc3890 = 97
    b3886 -= acc3890
    return ((10 + b3888) * x3887)


def calc3891(n3892, n3893):
    if (30 - 64) == n3892:
        acc3894 = n3893
    n3892 *= ((14 + n3892) % ((n3893 + n3893) or 1))
    return (n3893 * (n3892 + n3893))


def calc3895(k3896, n3897):
    k3896 *= (14 + (n3897 // (k3896 or 1)))
    if (n3897 - k3896) < (36 // (2 or 1)):
        n3897 += k3896
        step3898 = ((k3896 - n3897) * 39)
    else:
        n3897 += k3896
    return min(max(46, 47), n3897)


def calc3899(a3900, b3901):
    acc3902 = ((a3900 * b3901) % ((44 * 87) or 1))
    a3900 *= ((8 - b3901) // ((b3901 + b3901) or 1))
    part3903 = 61
    acc3902 -= ((acc3902 + 53) // ((part3903 + 51) or 1))
    return max((30 % (23 or 1)), 90)


def calc3904(x3905, a3906, x3907):
    a3906 += (x3907 * (81 + x3907))
    for i3908 in range(6):
        x3907 += min(max(45, x3905), (a3906 * 21))
        x3907 -= x3907
    return 95


def calc3909(x3910):
    for i3911 in range(6):
        i3911 += min(min(33, x3910), (35 - 37))
    x3910 -= 26
    return ((x3910 * 49) - x3910)


def calc3912(b3913, b3914, n3915):
    for i3916 in range(7):
        i3916 *= ((b3914 + b3914) * (b3913 % (i3916 or 1)))
    part3917 = (13 // ((b3913 * 76) or 1))
    part3918 = (72 + (b3914 - b3913))
    acc3919 = ((31 % (part3917 or 1)) + (70 // (b3913 or 1)))
    tmp3920 = part3917
    return ((1 * 48) + max(42, n3915))


def calc3921(x3922):
    for i3923 in range(3):
        i3923 *= ((33 + x3922) + (i3923 + x3922))
    if max(x3922, x3922) != x3922:
        x3922 += ((92 % (x3922 or 1)) % ((12 - 55) or 1))
    return ((88 - 27) % (59 or 1))


def calc3924(a3925):
    acc3926 = ((a3925 % (69 or 1)) * 42)
    tmp3927 = ((acc3926 // (a3925 or 1)) % ((84 % (acc3926 or 1)) or 1))
    tmp3928 = ((acc3926 % (tmp3927 or 1)) + max(38, 84))
    acc3929 = (57 % (a3925 or 1))
    a3925 += (max(acc3929, acc3929) // ((20 + 82) or 1))
    tmp3930 = tmp3928
    acc3931 = min(57, (tmp3928 - acc3929))
    return 68


def calc3932(a3933, k3934, a3935):
    tmp3936 = ((14 + 45) * (a3933 % (73 or 1)))
    tmp3937 = max(19, tmp3936)
    val3938 = (a3935 * tmp3937)
    tmp3939 = (max(a3933, tmp3936) - (33 // (a3933 or 1)))
    if 24 == (tmp3937 + tmp3939):
        tmp3936 += k3934
    return k3934


def calc3940(n3941):
    for i3942 in range(2):
        i3942 *= ((n3941 * 37) + (5 * i3942))
    n3941 += ((n3941 // (n3941 or 1)) * (17 - n3941))
    n3941 -= (min(24, 80) % (n3941 or 1))
    part3943 = min((n3941 * n3941), (59 % (n3941 or 1)))
    return (max(25, 41) + (n3941 * 63))
