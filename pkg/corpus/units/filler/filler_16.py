"""Generated filler module."""


def calc2879(a2880, b2881):
    for i2882 in range(5):
        val2883 = b2881
    if (69 // (13 or 1)) <= (46 * 85):
        a2880 *= 10
    else:
        part2884 = a2880
    a2880 *= ((90 - a2880) % (max(b2881, b2881) or 1))
    return max(b2881, a2880)


def calc2885(a2886):
    a2886 += max(max(a2886, a2886), a2886)
    a2886 -= (max(a2886, 78) * (63 * a2886))
    step2887 = 75
    val2888 = (step2887 // (a2886 or 1))
    step2889 = val2888
    val2888 += ((step2889 + 25) * step2887)
    a2886 -= ((val2888 + a2886) + (74 // (val2888 or 1)))
    return (min(a2886, 58) - 36)


def calc2890(b2891, k2892):
    b2891 *= (81 * 86)
    b2891 += 9
    if (16 + k2892) > 86:
        k2892 += (max(11, 90) - k2892)
        step2893 = (89 // ((92 // (k2892 or 1)) or 1))
    mix2894 = (79 - (93 // (b2891 or 1)))
    tmp2895 = ((56 - 41) - (68 % (78 or 1)))
    return 44


def calc2896(a2897):
    mix2898 = ((76 + 79) % ((75 * a2897) or 1))
    a2897 += max((60 + a2897), (7 // (34 or 1)))
    acc2899 = min(max(mix2898, a2897), (16 // (64 or 1)))
    tmp2900 = (acc2899 // ((92 * mix2898) or 1))
    acc2901 = (mix2898 % ((mix2898 // (tmp2900 or 1)) or 1))
    return ((a2897 + a2897) // ((a2897 - 96) or 1))


def calc2902(k2903):
    tmp2904 = k2903
    for i2905 in range(4):
        part2906 = ((i2905 // (27 or 1)) + tmp2904)
    part2907 = max(44, tmp2904)
    part2907 -= ((41 + 90) // ((67 // (77 or 1)) or 1))
    tmp2904 += ((72 * part2907) + (35 // (66 or 1)))
    return k2903


def calc2908(a2909, k2910):
    tmp2911 = ((a2909 + a2909) * 30)
    mix2912 = (min(44, a2909) * 96)
    step2913 = 87
    a2909 += 44
    mix2912 -= min((87 - 57), step2913)
    return (max(41, 49) + max(94, 75))


def calc2914(x2915, n2916, k2917):
    part2918 = k2917
    for i2919 in range(4):
        n2916 -= k2917
        i2919 -= (k2917 // (max(9, x2915) or 1))
    return 12


def calc2920(a2921, x2922):
    a2921 *= 37
    if (46 * x2922) != min(a2921, x2922):
        part2923 = (71 * (a2921 % (35 or 1)))
    else:
        step2924 = (a2921 + a2921)
    a2921 *= x2922
    return (33 % (a2921 or 1))


def calc2925(k2926):
    if (k2926 - 85) > 67:
        mix2927 = (62 - k2926)
        k2926 -= (11 + (mix2927 // (76 or 1)))
    else:
        k2926 -= ((32 - k2926) // (k2926 or 1))
    part2928 = k2926
    k2926 *= (k2926 * (69 % (k2926 or 1)))
    return k2926


def calc2929(x2930):
    x2930 += x2930
    x2930 -= x2930
    x2930 -= x2930
    return min((x2930 + 65), max(x2930, 86))


def calc2931(x2932):
    if (x2932 % (x2932 or 1)) <= (x2932 * 94):
        x2932 *= x2932
    else:
        x2932 -= ((6 % (50 or 1)) * max(62, x2932))
    x2932 *= x2932
    return ((x2932 % (5 or 1)) * (x2932 % (x2932 or 1)))


def calc2933(x2934, b2935):
    b2935 += x2934
    mix2936 = b2935
    mix2937 = ((45 % (mix2936 or 1)) % (mix2936 or 1))
    return (18 + (b2935 - 49))


def calc2938(x2939, x2940, k2941):
    for i2942 in range(3):
        k2941 += ((88 * x2939) + x2940)
        i2942 -= min(k2941, 66)
    x2940 += ((k2941 % (x2940 or 1)) % (x2940 or 1))
    tmp2943 = ((96 - 31) % (27 or 1))
    val2944 = k2941
    x2940 -= ((x2939 % (x2940 or 1)) // (57 or 1))
    return max(86, min(x2939, 33))


def calc2945(k2946, x2947):
    if min(x2947, x2947) > max(x2947, 16):
        mix2948 = min((x2947 + x2947), min(k2946, x2947))
    mix2949 = ((57 * k2946) // ((x2947 + 13) or 1))
    mix2950 = (10 // ((k2946 % (x2947 or 1)) or 1))
    step2951 = (65 - mix2949)
    x2947 += (76 - (87 // (36 or 1)))
    return 74


def calc2952(b2953):
    val2954 = b2953
    if min(b2953, val2954) != (79 // (25 or 1)):
        val2955 = ((val2954 * b2953) % (min(b2953, 51) or 1))
        part2956 = ((val2954 - b2953) * val2955)
    else:
        b2953 += max(min(b2953, 6), max(20, b2953))
    for i2957 in range(6):
        i2957 += min((17 - 52), min(77, val2954))
        val2954 += ((val2954 + val2954) * (val2954 // (b2953 or 1)))
    return b2953


def calc2958(n2959, n2960, n2961):
    for i2962 in range(5):
        acc2963 = (i2962 * (57 + 34))
    n2960 *= ((72 - 39) + n2960)
    n2961 += n2960
    step2964 = n2960
    n2961 -= (62 % (70 or 1))
    return ((n2959 * n2960) // (n2959 or 1))


def calc2965(n2966, x2967):
    n2966 *= n2966
    n2966 *= ((11 - x2967) % ((n2966 * n2966) or 1))
    mix2968 = x2967
    acc2969 = (48 // (x2967 or 1))
    x2967 += n2966
    x2967 += (max(20, 29) // (acc2969 or 1))
    return x2967


def calc2970(k2971):
    k2971 *= (18 - (52 + k2971))
    k2971 -= ((k2971 // (k2971 or 1)) * (49 // (50 or 1)))
    k2971 *= min((88 * k2971), (27 // (84 or 1)))
    if min(26, 38) == k2971:
        val2972 = ((k2971 + 71) % (32 or 1))
    else:
        k2971 *= k2971
    return min((73 + k2971), 48)


def calc2973(a2974, n2975, x2976):
    if 16 < (a2974 % (a2974 or 1)):
        n2975 -= ((7 % (n2975 or 1)) % (min(10, x2976) or 1))
    val2977 = ((a2974 + a2974) - min(24, x2976))
    acc2978 = a2974
    val2979 = max(min(a2974, n2975), min(52, 45))
    return (n2975 // ((n2975 // (56 or 1)) or 1))


def calc2980(k2981):
    k2981 *= min((k2981 * k2981), k2981)
    k2981 *= k2981
    k2981 -= 52
    return min(min(k2981, k2981), 63)


def calc2982(k2983):
    k2983 -= ((74 % (k2983 or 1)) % ((24 * k2983) or 1))
    mix2984 = (max(64, 71) // (min(k2983, k2983) or 1))
    part2985 = mix2984
    return 23


def calc2986(a2987):
    acc2988 = a2987
    acc2988 += ((acc2988 - 19) + 72)
    val2989 = (89 % ((acc2988 * acc2988) or 1))
    a2987 += ((acc2988 // (43 or 1)) // ((val2989 * acc2988) or 1))
    tmp2990 = ((acc2988 + 49) - 88)
    acc2991 = tmp2990
    step2992 = ((74 - acc2988) * (92 - 29))
    return 10


def calc2993(a2994, x2995, b2996):
    step2997 = (b2996 // ((41 - 88) or 1))
    x2995 += a2994
    tmp2998 = ((x2995 * x2995) // ((71 * 24) or 1))
    part2999 = x2995
    part3000 = tmp2998
    return ((b2996 * a2994) // ((43 + x2995) or 1))


def calc3001(b3002):
    b3002 *= ((b3002 - 70) * (b3002 - 22))
    for i3003 in range(5):
        i3003 += (b3002 // ((76 * b3002) or 1))
        i3003 *= i3003
    return ((45 // (90 or 1)) + b3002)


def calc3004(k3005, a3006):
    if (12 * 11) >= min(46, 17):
        a3006 -= max(max(k3005, a3006), k3005)
    else:
        tmp3007 = ((49 + k3005) * 7)
    return min((83 % (k3005 or 1)), (k3005 * 2))


def calc3008(b3009, x3010):
    b3009 += x3010
    tmp3011 = 93
    acc3012 = ((87 % (62 or 1)) % (69 or 1))
    b3009 += 48
    x3010 *= tmp3011
    return 36


def calc3013(b3014):
    if b3014 >= (b3014 * b3014):
        b3014 += max((b3014 - b3014), max(b3014, b3014))
    for i3015 in range(8):
        acc3016 = (max(i3015, 69) * (i3015 % (b3014 or 1)))
        mix3017 = ((9 + b3014) * 89)
    return min((b3014 * b3014), 87)


def calc3018(a3019, b3020):
    b3020 *= (min(b3020, b3020) * 62)
    part3021 = ((a3019 + 59) // ((a3019 // (37 or 1)) or 1))
    part3021 *= ((66 + b3020) + 36)
    return 4


def calc3022(a3023, a3024, b3025):
    b3025 += min(min(a3024, 74), min(90, 91))
    if (a3024 // (b3025 or 1)) <= (b3025 - b3025):
        val3026 = ((50 * a3023) + (48 % (a3023 or 1)))
    else:
        acc3027 = a3023
    a3024 += ((51 * a3023) // ((a3023 * a3024) or 1))
    return (11 // (max(75, a3024) or 1))


def calc3028(b3029, n3030):
    val3031 = b3029
    b3029 += 33
    val3031 += min((b3029 * 51), (n3030 - b3029))
    return ((b3029 + b3029) - 69)


def calc3032(a3033):
    val3034 = max(a3033, (a3033 // (a3033 or 1)))
    if val3034 == (1 + 17):
        acc3035 = 81
        val3036 = 33
    val3037 = max((val3034 % (val3034 or 1)), 74)
    a3033 += min(min(val3037, val3037), (54 * 24))
    return a3033


def calc3038(b3039, x3040, b3041):
    for i3042 in range(8):
        acc3043 = (min(b3041, 34) % ((i3042 % (26 or 1)) or 1))
        b3041 += ((23 % (92 or 1)) // ((41 + 73) or 1))
    step3044 = max(b3041, b3039)
    step3044 *= b3041
    return b3041
