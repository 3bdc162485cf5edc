"""Generated filler module."""


def calc3045(n3046):
    step3047 = (86 + (n3046 * 97))
    n3046 += 60
    mix3048 = min((76 // (n3046 or 1)), 62)
    step3047 *= max((n3046 + 71), (49 + mix3048))
    step3047 -= mix3048
    return (20 + (52 - 27))


def calc3049(a3050):
    if (a3050 + 16) < (a3050 + a3050):
        mix3051 = (min(a3050, a3050) // (a3050 or 1))
        mix3052 = 3
    else:
        a3050 *= min(a3050, (a3050 - a3050))
    part3053 = (a3050 // ((84 - 79) or 1))
    part3053 += (65 % (part3053 or 1))
    return max((a3050 % (25 or 1)), a3050)


def calc3054(n3055, k3056):
    n3055 += k3056
    for i3057 in range(9):
        i3057 += ((50 + k3056) + (n3055 % (23 or 1)))
        n3055 -= 53
    n3055 *= (57 // (2 or 1))
    val3058 = 31
    return ((k3056 * n3055) % (k3056 or 1))


def calc3059(a3060, a3061):
    a3060 -= (95 - (a3061 % (a3061 or 1)))
    step3062 = (43 - (a3060 + 8))
    a3060 *= ((61 // (3 or 1)) - (80 % (55 or 1)))
    step3062 *= step3062
    step3062 *= (a3060 % (min(step3062, 17) or 1))
    return a3060


def calc3063(b3064, n3065, x3066):
    mix3067 = (max(n3065, b3064) % (90 or 1))
    x3066 *= (min(74, n3065) % ((73 % (88 or 1)) or 1))
    tmp3068 = 55
    n3065 *= max((x3066 // (50 or 1)), max(66, mix3067))
    mix3067 += ((25 + 91) // (max(b3064, mix3067) or 1))
    return (n3065 % (n3065 or 1))


def calc3069(k3070, x3071, b3072):
    acc3073 = (57 * (x3071 * 26))
    k3070 *= ((k3070 * acc3073) + (65 - b3072))
    for i3074 in range(3):
        acc3075 = k3070
        acc3076 = ((k3070 - 86) % ((39 + 53) or 1))
    return ((91 - 71) % (max(19, x3071) or 1))


def calc3077(n3078, x3079, n3080):
    part3081 = 41
    n3080 += 40
    if 19 == (89 - n3078):
        x3079 -= n3080
    part3082 = (13 // (54 or 1))
    return max((x3079 - x3079), n3080)


def calc3083(b3084, b3085):
    b3085 += b3084
    part3086 = ((45 - b3085) + (b3085 * b3085))
    tmp3087 = 85
    tmp3088 = ((66 * 60) - (b3084 - tmp3087))
    b3085 *= ((70 % (b3084 or 1)) - (tmp3087 * part3086))
    return 72


def calc3089(k3090, b3091):
    for i3092 in range(3):
        i3092 += ((i3092 * i3092) % (b3091 or 1))
        k3090 += i3092
    acc3093 = k3090
    return (k3090 - k3090)


def calc3094(b3095, n3096, a3097):
    n3096 -= ((b3095 * n3096) - 77)
    part3098 = (b3095 - max(47, a3097))
    if (n3096 % (89 or 1)) >= 77:
        part3098 -= max((92 * 89), n3096)
    else:
        n3096 += (a3097 - (68 * part3098))
    acc3099 = ((a3097 + n3096) % (47 or 1))
    acc3099 -= (a3097 * 97)
    return (31 + (b3095 * b3095))


def calc3100(a3101, a3102):
    part3103 = (76 + (42 - a3102))
    part3103 *= part3103
    mix3104 = max((48 // (part3103 or 1)), (a3102 - a3102))
    mix3104 += (47 % (57 or 1))
    a3101 *= ((46 + a3102) + (84 + 26))
    return ((7 // (a3102 or 1)) - min(a3101, 39))


def calc3105(b3106):
    for i3107 in range(9):
        acc3108 = (i3107 + i3107)
    b3106 -= b3106
    mix3109 = (b3106 - max(b3106, b3106))
    return b3106


def calc3110(b3111, b3112):
    tmp3113 = b3112
    b3112 += (b3111 + (tmp3113 - tmp3113))
    b3111 *= tmp3113
    b3112 *= (max(b3111, 53) * (b3112 - b3111))
    return ((67 - 67) * (92 % (93 or 1)))


def calc3114(x3115):
    x3115 -= ((x3115 + 76) // ((47 % (x3115 or 1)) or 1))
    x3115 += min((x3115 + x3115), min(9, x3115))
    tmp3116 = x3115
    tmp3116 += x3115
    return 69


def calc3117(b3118):
    val3119 = (min(5, b3118) % ((b3118 + 74) or 1))
    tmp3120 = ((val3119 + b3118) // ((89 // (82 or 1)) or 1))
    b3118 -= b3118
    return ((78 * b3118) - (78 + 66))


def calc3121(n3122, n3123, n3124):
    for i3125 in range(2):
        mix3126 = n3123
        n3123 += ((i3125 % (20 or 1)) * 21)
    acc3127 = n3122
    step3128 = min(42, n3123)
    step3129 = ((acc3127 - 5) - 16)
    return max((n3123 - n3124), n3122)


def calc3130(b3131, b3132, a3133):
    val3134 = (71 // ((45 - a3133) or 1))
    val3134 *= min((b3131 * 68), (14 * b3131))
    step3135 = 31
    step3136 = ((b3131 - b3131) % ((6 + 90) or 1))
    return ((b3131 - 42) - b3131)


def calc3137(a3138, k3139):
    if k3139 != max(91, a3138):
        step3140 = (max(a3138, k3139) % ((a3138 - k3139) or 1))
        val3141 = 61
    k3139 -= (min(k3139, a3138) + (46 + k3139))
    for i3142 in range(3):
        tmp3143 = (i3142 % (2 or 1))
        i3142 *= max(tmp3143, (63 - a3138))
    return a3138


def calc3144(x3145, k3146, b3147):
    b3147 -= ((20 + k3146) - (65 * 40))
    mix3148 = (96 // ((k3146 - x3145) or 1))
    acc3149 = 31
    part3150 = ((93 - 14) % ((acc3149 % (mix3148 or 1)) or 1))
    acc3151 = min((67 % (72 or 1)), mix3148)
    part3152 = (x3145 % (x3145 or 1))
    part3152 -= ((part3150 - mix3148) * max(45, part3152))
    return min((k3146 - k3146), (x3145 - x3145))


def calc3153(n3154, b3155, k3156):
    k3156 *= ((b3155 * b3155) - (k3156 * k3156))
    k3156 *= max((n3154 // (89 or 1)), (b3155 - 76))
    for i3157 in range(6):
        step3158 = min((i3157 + i3157), (k3156 - 2))
        k3156 -= ((2 % (n3154 or 1)) - (i3157 % (64 or 1)))
    n3154 *= min(b3155, max(64, n3154))
    return n3154


def calc3159(b3160, n3161):
    val3162 = 29
    tmp3163 = (n3161 % (73 or 1))
    part3164 = max((b3160 - tmp3163), (tmp3163 % (b3160 or 1)))
    part3164 *= ((46 * 3) + (tmp3163 + 79))
    val3165 = (max(b3160, val3162) + (40 + n3161))
    step3166 = max((tmp3163 * val3165), val3162)
    return n3161


def calc3167(a3168):
    if a3168 <= a3168:
        mix3169 = ((a3168 * 63) // ((a3168 * 69) or 1))
    else:
        tmp3170 = ((76 * a3168) % ((a3168 // (91 or 1)) or 1))
    part3171 = 14
    return ((87 * 14) + (a3168 + a3168))


def calc3172(x3173, n3174):
    tmp3175 = (n3174 // ((78 - 35) or 1))
    tmp3175 *= tmp3175
    step3176 = (61 * 89)
    return ((48 + x3173) - (x3173 // (x3173 or 1)))


def calc3177(b3178, x3179):
    acc3180 = ((x3179 % (42 or 1)) + (b3178 % (70 or 1)))
    tmp3181 = (max(x3179, 6) - (acc3180 // (x3179 or 1)))
    b3178 *= (min(2, 64) + (71 + b3178))
    step3182 = ((acc3180 - 33) // ((48 % (19 or 1)) or 1))
    step3182 -= min(74, (step3182 // (56 or 1)))
    step3182 *= ((15 // (tmp3181 or 1)) % (72 or 1))
    val3183 = (70 + step3182)
    return (89 * (x3179 + b3178))


def calc3184(n3185, b3186, x3187):
    if x3187 < 24:
        acc3188 = ((n3185 + 85) + x3187)
        n3185 -= (b3186 + (n3185 * n3185))
    else:
        step3189 = (x3187 + (x3187 // (87 or 1)))
    mix3190 = (n3185 // ((b3186 + 25) or 1))
    x3187 -= ((n3185 // (11 or 1)) // ((7 % (x3187 or 1)) or 1))
    step3191 = mix3190
    return (x3187 - max(n3185, b3186))


def calc3192(a3193):
    if (83 % (80 or 1)) == (a3193 + a3193):
        tmp3194 = min(min(a3193, a3193), a3193)
        tmp3194 *= a3193
    return a3193


def calc3195(k3196, n3197):
    if 12 > 1:
        n3197 -= n3197
    else:
        k3196 += 63
    for i3198 in range(7):
        i3198 += ((49 - k3196) - (n3197 // (k3196 or 1)))
    k3196 -= (66 - (82 % (k3196 or 1)))
    return (n3197 // ((n3197 - k3196) or 1))


def calc3199(k3200):
    for i3201 in range(7):
        i3201 -= 92
        i3201 += (k3200 // ((64 * i3201) or 1))
    step3202 = ((k3200 % (78 or 1)) - (40 * 74))
    if (k3200 % (15 or 1)) > 70:
        val3203 = max((step3202 // (55 or 1)), min(k3200, 87))
    else:
        step3204 = (44 + (step3202 + 10))
    return 41


def calc3205(b3206, b3207):
    acc3208 = (min(16, b3206) // ((86 + 53) or 1))
    b3207 *= (max(acc3208, 74) % ((b3206 - acc3208) or 1))
    mix3209 = 48
    b3207 *= (mix3209 // ((acc3208 % (b3207 or 1)) or 1))
    acc3210 = ((77 - 34) * (78 % (b3207 or 1)))
    return 11


def calc3211(n3212, x3213, x3214):
    part3215 = (x3213 * (x3214 + n3212))
    part3216 = (min(x3213, 69) * (x3214 // (part3215 or 1)))
    step3217 = (61 * max(61, 92))
    mix3218 = (min(part3216, part3216) * part3215)
    tmp3219 = (part3215 // (n3212 or 1))
    return ((67 - 97) - (n3212 * x3214))


def calc3220(a3221):
    for i3222 in range(2):
        mix3223 = 12
    a3221 -= (max(94, a3221) + (40 * 21))
    mix3224 = ((a3221 + a3221) - 91)
    return ((76 - a3221) * a3221)


def calc3225(x3226):
    if (72 + 75) >= min(x3226, 7):
        x3226 *= min((x3226 - x3226), (73 * x3226))
        x3226 *= x3226
    part3227 = x3226
    val3228 = (max(x3226, x3226) // ((31 - x3226) or 1))
    x3226 += min((34 % (90 or 1)), 95)
    part3229 = 23
    return ((48 + 66) * (32 * 77))
