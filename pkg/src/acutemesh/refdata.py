"""Reference vertex tables for the 543-tetrahedron triangulations.

Two meshes share one combinatorial structure on 116 vertices: one
realizes it on the regular tetrahedron with corners at alternating
vertices of the cube [0, 60000]^3, the other on the standard
(cube-corner) tetrahedron with legs of length 60000 along the axes.
All coordinates are exact integers; the edge list is common to both.
"""

T0_POINTS = (
    (60000, 0, 0), (60000, 60000, 60000), (0, 0, 60000), (0, 60000, 0),
    (0, 30000, 30000), (60000, 30000, 30000), (30000, 30000, 0), (30000, 60000, 30000),
    (30000, 30000, 60000), (30000, 0, 30000), (33916, 43042, 16958), (43042, 26084, 43042),
    (16958, 16958, 26084), (16958, 33916, 43042), (43042, 16958, 33916), (43042, 33916, 16958),
    (43042, 43042, 26084), (16958, 26084, 16958), (16958, 43042, 33916), (26084, 43042, 43042),
    (26084, 16958, 16958), (33916, 16958, 43042), (34171, 39326, 34171), (20674, 34171, 25829),
    (25829, 25829, 39326), (34171, 25829, 20674), (25829, 20674, 34171), (39326, 34171, 34171),
    (39326, 25829, 25829), (20674, 25829, 34171), (34171, 20674, 25829), (34171, 34171, 39326),
    (25829, 34171, 20674), (25829, 39326, 25829), (24956, 35044, 35044), (39033, 32132, 27868),
    (27868, 27868, 20967), (32132, 20967, 32132), (32132, 32132, 20967), (24956, 24956, 24956),
    (32132, 39033, 27868), (20967, 27868, 27868), (39033, 27868, 32132), (35044, 35044, 24956),
    (20967, 32132, 32132), (27868, 20967, 27868), (35044, 24956, 35044), (27868, 32132, 39033),
    (32132, 27868, 39033), (27868, 39033, 32132), (35393, 30000, 35393), (24607, 30000, 24607),
    (35393, 24607, 30000), (24607, 35393, 30000), (35393, 30000, 24607), (24607, 30000, 35393),
    (24607, 24607, 30000), (35393, 35393, 30000), (30000, 35393, 24607), (30000, 24607, 35393),
    (30000, 24607, 24607), (30000, 35393, 35393), (33844, 26156, 26156), (33844, 33844, 33844),
    (26156, 26156, 33844), (26156, 33844, 26156), (24207, 28632, 31368), (31368, 31368, 35793),
    (28632, 35793, 28632), (28632, 28632, 35793), (28632, 24207, 31368), (35793, 31368, 31368),
    (24207, 31368, 28632), (35793, 28632, 28632), (31368, 35793, 31368), (31368, 28632, 24207),
    (28632, 31368, 24207), (31368, 24207, 28632), (31992, 31992, 25546), (34454, 28008, 31992),
    (28008, 25546, 28008), (28008, 31992, 34454), (31992, 34454, 28008), (25546, 28008, 28008),
    (25546, 31992, 31992), (34454, 31992, 28008), (28008, 34454, 31992), (28008, 28008, 25546),
    (31992, 28008, 34454), (31992, 25546, 31992), (32775, 32775, 30655), (27225, 30655, 27225),
    (29345, 27225, 32775), (32775, 29345, 27225), (27225, 32775, 29345), (27225, 29345, 32775),
    (27225, 27225, 30655), (32775, 30655, 32775), (32775, 27225, 29345), (30655, 27225, 27225),
    (30655, 32775, 32775), (29345, 32775, 27225), (28494, 31506, 31506), (30865, 29135, 29135),
    (33159, 30000, 30000), (28494, 28494, 28494), (29135, 29135, 30865), (26841, 30000, 30000),
    (30000, 30000, 33159), (30000, 26841, 30000), (31506, 31506, 28494), (29135, 30865, 29135),
    (30000, 30000, 26841), (31506, 28494, 31506), (30865, 30865, 30865), (30000, 33159, 30000),
)

T1_POINTS = (
    (60000, 0, 0), (0, 0, 0), (0, 0, 60000), (0, 60000, 0),
    (0, 30000, 30000), (17574, 0, 0), (30000, 30000, 0), (0, 17574, 0),
    (0, 0, 17574), (30000, 0, 30000), (12384, 20726, 0), (10445, 0, 10445),
    (16958, 16958, 26084), (0, 12384, 20726), (20726, 0, 12384), (20726, 12384, 0),
    (10445, 10445, 0), (16958, 26084, 16958), (0, 20726, 12384), (0, 10445, 10445),
    (26084, 16958, 16958), (12384, 0, 20726), (6257, 10104, 6257), (9498, 21496, 13569),
    (7743, 7743, 19656), (21496, 13569, 9498), (13569, 9498, 21496), (10104, 6257, 6257),
    (19656, 7743, 7743), (9498, 13569, 21496), (21496, 9498, 13569), (6257, 6257, 10104),
    (13569, 21496, 9498), (7743, 19656, 7743), (5137, 13344, 13344), (15349, 8879, 5284),
    (17685, 17685, 11260), (16563, 7777, 16563), (16563, 16563, 7777), (16026, 16026, 16026),
    (8879, 15349, 5284), (11260, 17685, 17685), (15349, 5284, 8879), (13344, 13344, 5137),
    (7777, 16563, 16563), (17685, 11260, 17685), (13344, 5137, 13344), (5284, 8879, 15349),
    (8879, 5284, 15349), (5284, 15349, 8879), (10649, 6407, 10649), (13477, 17719, 13477),
    (16305, 7821, 12063), (7821, 16305, 12063), (16305, 12063, 7821), (7821, 12063, 16305),
    (13477, 13477, 17719), (10649, 10649, 6407), (12063, 16305, 7821), (12063, 7821, 16305),
    (17719, 13477, 13477), (6407, 10649, 10649), (17102, 11055, 11055), (9039, 9039, 9039),
    (11055, 11055, 17102), (11055, 17102, 11055), (10544, 14025, 16177), (8666, 8666, 12147),
    (9383, 15016, 9383), (9383, 9383, 15016), (14025, 10544, 16177), (12147, 8666, 8666),
    (10544, 16177, 14025), (15016, 9383, 9383), (8666, 12147, 8666), (16177, 14025, 10544),
    (14025, 16177, 10544), (16177, 10544, 14025), (13876, 13876, 8805), (13231, 8160, 11294),
    (14921, 12984, 14921), (8160, 11294, 13231), (11294, 13231, 8160), (12984, 14921, 14921),
    (8805, 13876, 13876), (13231, 11294, 8160), (8160, 13231, 11294), (14921, 14921, 12984),
    (11294, 8160, 13231), (13876, 8805, 13876), (10992, 10992, 9324), (12447, 15145, 12447),
    (11891, 10223, 14589), (14589, 11891, 10223), (10223, 14589, 11891), (10223, 11891, 14589),
    (12447, 12447, 15145), (10992, 9324, 10992), (14589, 10223, 11891), (15145, 12447, 12447),
    (9324, 10992, 10992), (11891, 14589, 10223), (10088, 12458, 12458), (13197, 11836, 11836),
    (12891, 10406, 10406), (13247, 13247, 13247), (11836, 11836, 13197), (11234, 13719, 13719),
    (10406, 10406, 12891), (13719, 11234, 13719), (12458, 12458, 10088), (11836, 13197, 11836),
    (13719, 13719, 11234), (12458, 10088, 12458), (11382, 11382, 11382), (10406, 12891, 10406),
)

EDGES = (
    (0, 5), (0, 6), (0, 9), (0, 14), (0, 15), (0, 20), (0, 25), (0, 28), (0, 30),
    (1, 5), (1, 7), (1, 8), (1, 11), (1, 16), (1, 19), (1, 22), (1, 27), (1, 31),
    (2, 4), (2, 8), (2, 9), (2, 12), (2, 13), (2, 21), (2, 24), (2, 26), (2, 29),
    (3, 4), (3, 6), (3, 7), (3, 10), (3, 17), (3, 18), (3, 23), (3, 32), (3, 33),
    (4, 12), (4, 13), (4, 17), (4, 18), (4, 23), (4, 29), (4, 41), (4, 44), (5, 11),
    (5, 14), (5, 15), (5, 16), (5, 27), (5, 28), (5, 35), (5, 42), (6, 10), (6, 15),
    (6, 17), (6, 20), (6, 25), (6, 32), (6, 36), (6, 38), (7, 10), (7, 16), (7, 18),
    (7, 19), (7, 22), (7, 33), (7, 40), (7, 49), (8, 11), (8, 13), (8, 19), (8, 21),
    (8, 24), (8, 31), (8, 47), (8, 48), (9, 12), (9, 14), (9, 20), (9, 21), (9, 26),
    (9, 30), (9, 37), (9, 45), (10, 15), (10, 16), (10, 32), (10, 33), (10, 38), (10, 40),
    (10, 43), (10, 58), (11, 14), (11, 21), (11, 27), (11, 31), (11, 42), (11, 46), (11, 48),
    (11, 50), (12, 17), (12, 20), (12, 26), (12, 29), (12, 39), (12, 41), (12, 45), (12, 56),
    (13, 18), (13, 19), (13, 24), (13, 29), (13, 34), (13, 44), (13, 47), (13, 55), (14, 21),
    (14, 28), (14, 30), (14, 37), (14, 42), (14, 46), (14, 52), (15, 16), (15, 25), (15, 28),
    (15, 35), (15, 38), (15, 43), (15, 54), (16, 22), (16, 27), (16, 35), (16, 40), (16, 43),
    (16, 57), (17, 20), (17, 23), (17, 32), (17, 36), (17, 39), (17, 41), (17, 51), (18, 19),
    (18, 23), (18, 33), (18, 34), (18, 44), (18, 49), (18, 53), (19, 22), (19, 31), (19, 34),
    (19, 47), (19, 49), (19, 61), (20, 25), (20, 30), (20, 36), (20, 39), (20, 45), (20, 60),
    (21, 24), (21, 26), (21, 37), (21, 46), (21, 48), (21, 59), (22, 27), (22, 31), (22, 40),
    (22, 49), (22, 57), (22, 61), (22, 63), (22, 74), (23, 32), (23, 33), (23, 41), (23, 44),
    (23, 51), (23, 53), (23, 65), (23, 72), (24, 26), (24, 29), (24, 47), (24, 48), (24, 55),
    (24, 59), (24, 64), (24, 69), (25, 28), (25, 30), (25, 36), (25, 38), (25, 54), (25, 60),
    (25, 62), (25, 75), (26, 29), (26, 37), (26, 45), (26, 56), (26, 59), (26, 64), (26, 70),
    (27, 31), (27, 35), (27, 42), (27, 50), (27, 57), (27, 63), (27, 71), (28, 30), (28, 35),
    (28, 42), (28, 52), (28, 54), (28, 62), (28, 73), (29, 41), (29, 44), (29, 55), (29, 56),
    (29, 64), (29, 66), (30, 37), (30, 45), (30, 52), (30, 60), (30, 62), (30, 77), (31, 47),
    (31, 48), (31, 50), (31, 61), (31, 63), (31, 67), (32, 33), (32, 36), (32, 38), (32, 51),
    (32, 58), (32, 65), (32, 76), (33, 40), (33, 49), (33, 53), (33, 58), (33, 65), (33, 68),
    (34, 44), (34, 47), (34, 49), (34, 53), (34, 55), (34, 61), (34, 81), (34, 84), (34, 86),
    (35, 42), (35, 43), (35, 54), (35, 57), (35, 71), (35, 73), (35, 85), (36, 38), (36, 39),
    (36, 51), (36, 60), (36, 75), (36, 76), (36, 87), (37, 45), (37, 46), (37, 52), (37, 59),
    (37, 70), (37, 77), (37, 89), (38, 43), (38, 54), (38, 58), (38, 75), (38, 76), (38, 78),
    (39, 41), (39, 45), (39, 51), (39, 56), (39, 60), (39, 80), (39, 83), (39, 87), (40, 43),
    (40, 49), (40, 57), (40, 58), (40, 68), (40, 74), (40, 82), (41, 44), (41, 51), (41, 56),
    (41, 66), (41, 72), (41, 83), (42, 46), (42, 50), (42, 52), (42, 71), (42, 73), (42, 79),
    (43, 54), (43, 57), (43, 58), (43, 78), (43, 82), (43, 85), (44, 53), (44, 55), (44, 66),
    (44, 72), (44, 84), (45, 56), (45, 60), (45, 70), (45, 77), (45, 80), (46, 48), (46, 50),
    (46, 52), (46, 59), (46, 79), (46, 88), (46, 89), (47, 48), (47, 55), (47, 61), (47, 67),
    (47, 69), (47, 81), (48, 50), (48, 59), (48, 67), (48, 69), (48, 88), (49, 53), (49, 61),
    (49, 68), (49, 74), (49, 86), (50, 63), (50, 67), (50, 71), (50, 79), (50, 88), (50, 97),
    (51, 65), (51, 72), (51, 76), (51, 83), (51, 87), (51, 91), (52, 62), (52, 73), (52, 77),
    (52, 79), (52, 89), (52, 98), (53, 65), (53, 68), (53, 72), (53, 84), (53, 86), (53, 94),
    (54, 62), (54, 73), (54, 75), (54, 78), (54, 85), (54, 93), (55, 64), (55, 66), (55, 69),
    (55, 81), (55, 84), (55, 95), (56, 64), (56, 66), (56, 70), (56, 80), (56, 83), (56, 96),
    (57, 63), (57, 71), (57, 74), (57, 82), (57, 85), (57, 90), (58, 65), (58, 68), (58, 76),
    (58, 78), (58, 82), (58, 101), (59, 64), (59, 69), (59, 70), (59, 88), (59, 89), (59, 92),
    (60, 62), (60, 75), (60, 77), (60, 80), (60, 87), (60, 99), (61, 63), (61, 67), (61, 74),
    (61, 81), (61, 86), (61, 100), (62, 73), (62, 75), (62, 77), (62, 93), (62, 98), (62, 99),
    (63, 67), (63, 71), (63, 74), (63, 90), (63, 97), (63, 100), (64, 66), (64, 69), (64, 70),
    (64, 92), (64, 95), (64, 96), (65, 68), (65, 72), (65, 76), (65, 91), (65, 94), (65, 101),
    (66, 72), (66, 83), (66, 84), (66, 95), (66, 96), (66, 107), (67, 69), (67, 81), (67, 88),
    (67, 97), (67, 100), (67, 108), (68, 74), (68, 82), (68, 86), (68, 94), (68, 101), (68, 115),
    (69, 81), (69, 88), (69, 92), (69, 95), (69, 108), (70, 77), (70, 80), (70, 89), (70, 92),
    (70, 96), (70, 109), (71, 73), (71, 79), (71, 85), (71, 90), (71, 97), (71, 104), (72, 83),
    (72, 84), (72, 91), (72, 94), (72, 107), (73, 79), (73, 85), (73, 93), (73, 98), (73, 104),
    (74, 82), (74, 86), (74, 90), (74, 100), (74, 115), (75, 76), (75, 78), (75, 87), (75, 93),
    (75, 99), (75, 112), (76, 78), (76, 87), (76, 91), (76, 101), (76, 112), (77, 80), (77, 89),
    (77, 98), (77, 99), (77, 109), (78, 82), (78, 85), (78, 93), (78, 101), (78, 110), (78, 112),
    (79, 88), (79, 89), (79, 97), (79, 98), (79, 104), (79, 113), (80, 83), (80, 87), (80, 96),
    (80, 99), (80, 105), (80, 109), (81, 84), (81, 86), (81, 95), (81, 100), (81, 102), (81, 108),
    (82, 85), (82, 90), (82, 101), (82, 110), (82, 115), (83, 87), (83, 91), (83, 96), (83, 105),
    (83, 107), (84, 86), (84, 94), (84, 95), (84, 102), (84, 107), (85, 90), (85, 93), (85, 104),
    (85, 110), (86, 94), (86, 100), (86, 102), (86, 115), (87, 91), (87, 99), (87, 105), (87, 112),
    (88, 89), (88, 92), (88, 97), (88, 108), (88, 113), (89, 92), (89, 98), (89, 109), (89, 113),
    (90, 97), (90, 100), (90, 104), (90, 110), (90, 114), (90, 115), (91, 94), (91, 101), (91, 105),
    (91, 107), (91, 111), (91, 112), (92, 95), (92, 96), (92, 106), (92, 108), (92, 109), (92, 113),
    (93, 98), (93, 99), (93, 103), (93, 104), (93, 110), (93, 112), (94, 101), (94, 102), (94, 107),
    (94, 111), (94, 115), (95, 96), (95, 102), (95, 106), (95, 107), (95, 108), (96, 105), (96, 106),
    (96, 107), (96, 109), (97, 100), (97, 104), (97, 108), (97, 113), (97, 114), (98, 99), (98, 103),
    (98, 104), (98, 109), (98, 113), (99, 103), (99, 105), (99, 109), (99, 112), (100, 102), (100, 108),
    (100, 114), (100, 115), (101, 110), (101, 111), (101, 112), (101, 115), (102, 106), (102, 107), (102, 108),
    (102, 111), (102, 114), (102, 115), (103, 104), (103, 105), (103, 106), (103, 109), (103, 110), (103, 111),
    (103, 112), (103, 113), (103, 114), (104, 110), (104, 113), (104, 114), (105, 106), (105, 107), (105, 109),
    (105, 111), (105, 112), (106, 107), (106, 108), (106, 109), (106, 111), (106, 113), (106, 114), (107, 111),
    (108, 113), (108, 114), (109, 113), (110, 111), (110, 112), (110, 114), (110, 115), (111, 112), (111, 114),
    (111, 115), (113, 114), (114, 115),
)
