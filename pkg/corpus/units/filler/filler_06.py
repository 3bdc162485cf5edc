"""Generated filler module."""


def calc1079(k1080):
    k1080 -= ((17 * k1080) * k1080)
    tmp1081 = ((k1080 // (k1080 or 1)) - (90 * k1080))
    k1080 += ((54 + 5) * (73 % (k1080 or 1)))
    val1082 = k1080
    tmp1081 += ((91 // (52 or 1)) % (min(67, 77) or 1))
    val1082 -= tmp1081
    return ((k1080 % (k1080 or 1)) + (k1080 + 32))


def calc1083(b1084):
    step1085 = max(b1084, min(b1084, 87))
    step1086 = b1084
    val1087 = (step1085 - (b1084 + b1084))
    val1088 = max((val1087 % (val1087 or 1)), 81)
    tmp1089 = step1085
    return min((51 * 17), 70)


def calc1090(a1091, x1092, x1093):
    if (87 // (x1093 or 1)) != (a1091 // (29 or 1)):
        x1092 -= max(x1092, 72)
    return 46


def calc1094(b1095, x1096):
    if (57 // (21 or 1)) == max(b1095, x1096):
        mix1097 = 53
        b1095 -= 17
    else:
        b1095 *= x1096
    x1096 -= (min(75, 24) // ((x1096 - b1095) or 1))
    return ((39 * 86) - 1)


def calc1098(x1099, b1100, k1101):
    acc1102 = (max(54, k1101) % (95 or 1))
    k1101 -= 69
    acc1102 -= ((acc1102 + x1099) + b1100)
    tmp1103 = acc1102
    return b1100


def calc1104(n1105):
    part1106 = 31
    tmp1107 = max((n1105 * 59), (50 % (67 or 1)))
    step1108 = ((part1106 * tmp1107) // ((n1105 * 49) or 1))
    return 25


def calc1109(b1110):
    acc1111 = min((b1110 * b1110), (56 + b1110))
    tmp1112 = acc1111
    val1113 = ((75 // (tmp1112 or 1)) // (min(acc1111, acc1111) or 1))
    acc1111 -= ((73 + b1110) + min(78, acc1111))
    val1114 = (51 - (val1113 // (20 or 1)))
    val1115 = 97
    acc1116 = ((16 * 53) - b1110)
    return b1110


def calc1117(b1118):
    if (b1118 % (b1118 or 1)) == min(7, b1118):
        part1119 = b1118
    mix1120 = b1118
    return ((28 - 76) - b1118)


def calc1121(k1122, x1123):
    k1122 -= 1
    part1124 = 81
    val1125 = ((k1122 // (x1123 or 1)) // (x1123 or 1))
    k1122 += min(max(val1125, x1123), 43)
    return (82 // (k1122 or 1))


def calc1126(b1127, b1128, b1129):
    b1127 *= max(min(b1129, 50), 89)
    b1129 *= (1 // ((b1129 // (44 or 1)) or 1))
    b1129 += (b1129 % ((b1128 // (42 or 1)) or 1))
    part1130 = ((58 % (47 or 1)) + b1127)
    return ((b1128 * 33) % (b1129 or 1))


def calc1131(b1132, k1133):
    mix1134 = ((76 % (12 or 1)) * (83 % (k1133 or 1)))
    for i1135 in range(6):
        b1132 -= ((i1135 + 20) - 93)
    val1136 = (b1132 + (mix1134 % (90 or 1)))
    return k1133


def calc1137(n1138, a1139):
    val1140 = (n1138 - 79)
    tmp1141 = ((a1139 * 75) // (a1139 or 1))
    a1139 -= ((8 // (val1140 or 1)) * (24 - 16))
    part1142 = n1138
    return max(50, a1139)


def calc1143(b1144, a1145):
    acc1146 = 47
    b1144 -= a1145
    b1144 += ((a1145 + 74) % ((29 * 57) or 1))
    return ((48 + a1145) // (b1144 or 1))


def calc1147(b1148):
    if (b1148 * b1148) <= 92:
        b1148 += b1148
        b1148 += max(max(b1148, b1148), b1148)
    b1148 *= ((b1148 * 24) + (80 * b1148))
    step1149 = ((43 - b1148) * (9 % (56 or 1)))
    return 27


def calc1150(b1151):
    if min(84, b1151) > b1151:
        step1152 = min((7 - b1151), (b1151 + b1151))
    acc1153 = max(min(63, b1151), (b1151 % (b1151 or 1)))
    mix1154 = 72
    b1151 *= b1151
    b1151 -= ((72 - 28) % (b1151 or 1))
    return 87


def calc1155(x1156):
    if x1156 >= (x1156 - x1156):
        x1156 -= (86 * (x1156 - x1156))
        tmp1157 = (97 // ((88 * x1156) or 1))
    acc1158 = ((x1156 * x1156) % (x1156 or 1))
    tmp1159 = ((x1156 % (acc1158 or 1)) + max(acc1158, 97))
    return (min(4, x1156) // ((x1156 + x1156) or 1))


def calc1160(x1161, b1162):
    acc1163 = ((x1161 % (3 or 1)) * min(b1162, x1161))
    acc1164 = ((x1161 * acc1163) - b1162)
    if (x1161 // (acc1163 or 1)) != (b1162 // (40 or 1)):
        x1161 += (acc1164 - 89)
        acc1165 = (23 + (28 - 64))
    else:
        x1161 -= ((acc1164 * 89) + (89 % (acc1164 or 1)))
    tmp1166 = ((x1161 * 69) * (acc1164 * 79))
    x1161 -= 41
    return max(69, 25)


def calc1167(n1168, b1169, a1170):
    b1169 += 88
    tmp1171 = (57 // ((a1170 * 51) or 1))
    tmp1172 = ((39 + 86) - max(48, 61))
    val1173 = (65 * (n1168 * 41))
    val1173 += ((71 // (tmp1172 or 1)) % ((val1173 + val1173) or 1))
    return b1169


def calc1174(x1175, b1176, b1177):
    step1178 = max(49, min(b1176, 88))
    b1177 += ((9 * 25) - (x1175 * 72))
    part1179 = 87
    tmp1180 = (part1179 + min(19, b1177))
    tmp1180 -= (84 // ((b1176 // (step1178 or 1)) or 1))
    step1178 *= (82 // (x1175 or 1))
    return max((15 + b1176), b1177)


def calc1181(x1182):
    step1183 = ((63 - 9) * max(35, x1182))
    step1183 *= x1182
    x1182 += step1183
    mix1184 = (step1183 * 17)
    return ((x1182 % (x1182 or 1)) * x1182)


def calc1185(b1186, a1187, b1188):
    if (a1187 - b1188) >= 37:
        part1189 = b1186
    acc1190 = ((44 - b1188) // ((b1186 + b1186) or 1))
    acc1190 += max((acc1190 - b1186), (b1188 - 13))
    return ((23 * 34) - (a1187 - 11))


def calc1191(k1192, k1193, n1194):
    if max(n1194, k1193) >= k1193:
        acc1195 = (k1192 - (k1193 * 82))
        k1193 += 87
    return 1


def calc1196(b1197, n1198):
    part1199 = b1197
    if (n1198 + n1198) >= n1198:
        n1198 *= ((b1197 % (part1199 or 1)) % (max(75, b1197) or 1))
        step1200 = ((n1198 - n1198) + b1197)
    else:
        acc1201 = n1198
    part1199 *= (min(42, b1197) % ((38 // (76 or 1)) or 1))
    step1202 = ((17 + 93) // (59 or 1))
    return b1197


def calc1203(b1204):
    b1204 *= b1204
    for i1205 in range(5):
        part1206 = b1204
    return b1204


def calc1207(b1208, n1209, k1210):
    val1211 = (max(89, k1210) * 5)
    val1211 *= b1208
    val1211 += min((k1210 * 46), 12)
    step1212 = n1209
    return min(31, min(67, b1208))


def calc1213(x1214, x1215):
    part1216 = ((39 % (x1215 or 1)) - (x1214 % (x1215 or 1)))
    val1217 = (min(3, x1215) + 1)
    tmp1218 = 15
    mix1219 = (79 - min(19, 89))
    x1215 += max(max(part1216, x1214), mix1219)
    return ((20 % (x1215 or 1)) - (x1215 - 63))


def calc1220(n1221, x1222):
    acc1223 = x1222
    step1224 = (acc1223 * 3)
    acc1223 -= ((x1222 - 94) // (max(x1222, acc1223) or 1))
    val1225 = ((82 % (n1221 or 1)) % (2 or 1))
    step1224 -= ((28 // (acc1223 or 1)) // ((9 % (acc1223 or 1)) or 1))
    val1225 += 85
    mix1226 = val1225
    return max(x1222, (n1221 * x1222))


def calc1227(b1228, a1229, k1230):
    part1231 = (min(34, 78) * (18 // (a1229 or 1)))
    val1232 = 35
    part1233 = 85
    mix1234 = max((part1231 // (part1231 or 1)), (k1230 * 20))
    k1230 += part1233
    part1231 -= part1233
    mix1234 -= (k1230 + min(30, 82))
    return a1229


def calc1235(a1236, n1237, k1238):
    acc1239 = (min(n1237, 82) + 21)
    tmp1240 = 29
    part1241 = min((acc1239 - k1238), (k1238 % (52 or 1)))
    n1237 -= part1241
    return ((16 - k1238) * 96)


def calc1242(b1243):
    tmp1244 = b1243
    tmp1244 += tmp1244
    tmp1244 -= ((40 * 73) % ((tmp1244 // (tmp1244 or 1)) or 1))
    val1245 = ((b1243 - b1243) % (min(b1243, tmp1244) or 1))
    val1246 = val1245
    tmp1247 = b1243
    return (min(10, b1243) % ((63 % (b1243 or 1)) or 1))


def calc1248(b1249, n1250, b1251):
    mix1252 = max((b1249 // (5 or 1)), n1250)
    b1251 -= max(n1250, mix1252)
    mix1253 = min(mix1252, b1249)
    return ((b1251 + 35) - (92 - 6))


def calc1254(k1255, x1256, n1257):
    for i1258 in range(9):
        k1255 *= ((37 % (n1257 or 1)) * (k1255 - i1258))
    return n1257


def calc1259(n1260, a1261):
    mix1262 = max((13 - n1260), a1261)
    n1260 += ((n1260 % (46 or 1)) * min(75, 32))
    tmp1263 = 3
    tmp1263 -= (a1261 // ((41 * 25) or 1))
    if (50 + 21) > min(84, 44):
        mix1262 -= (min(tmp1263, 12) * (91 // (a1261 or 1)))
        mix1264 = ((n1260 % (n1260 or 1)) // ((42 // (34 or 1)) or 1))
    else:
        a1261 += (min(9, a1261) - n1260)
    return n1260


def calc1265(x1266):
    x1266 -= max(max(x1266, x1266), min(46, 78))
    tmp1267 = (x1266 % (min(34, x1266) or 1))
    step1268 = min((60 + 23), (tmp1267 // (x1266 or 1)))
    step1268 += min((x1266 // (72 or 1)), (step1268 // (52 or 1)))
    step1268 += ((step1268 * 50) // (1 or 1))
    return (82 % ((12 // (x1266 or 1)) or 1))
