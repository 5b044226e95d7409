#pragma once
#include <string_view>
// Byte-identical copies of the files under data/, so the CLI works with no
// installation step. Generated from those files; a test keeps them in sync.
namespace medalstats::embedded {

inline constexpr std::string_view games_norway = R"TSV(# Norwegian medal record per Winter Olympics, 1924-2026.
# percent = 100 * total / (3 * events), rounded to one decimal.
# host	year	events	gold	silver	bronze	total	nations	percent
Chamonix	1924	16	4	7	6	17	16	35.4
St Moritz	1928	14	6	4	5	15	25	35.7
Lake Placid	1932	14	3	4	3	10	17	23.8
Garmisch	1936	17	7	5	3	15	28	29.4
St Moritz	1948	22	4	3	3	10	28	15.2
Oslo	1952	22	7	3	6	16	30	24.2
Cortina	1956	24	2	1	1	4	32	5.6
Squaw Valley	1960	27	3	3	0	6	30	7.4
Innsbruck	1964	34	3	6	6	15	36	14.7
Grenoble	1968	35	6	6	2	14	37	13.3
Sapporo	1972	35	2	5	5	12	35	11.4
Innsbruck	1976	37	3	3	1	7	37	6.3
Lake Placid	1980	38	1	3	6	10	37	8.8
Sarajevo	1984	39	3	2	4	9	49	7.7
Calgary	1988	46	0	3	2	5	57	3.6
Albertville	1992	57	9	6	5	20	64	11.7
Lillehammer	1994	61	10	11	5	26	67	14.2
Nagano	1998	68	10	10	5	25	72	12.3
Salt Lake Placid	2002	78	13	5	7	25	78	10.7
Torino	2006	84	2	8	9	19	80	7.5
Vancouver	2010	86	9	8	6	23	82	8.9
Sochi	2014	98	11	5	10	26	88	8.8
PyeongChang	2018	102	14	14	11	39	92	12.7
Beijing	2022	109	16	8	13	37	91	11.3
Milano Cortina	2026	116	18	12	11	41	92	11.8
)TSV";

inline constexpr std::string_view nations_2026 = R"TSV(# Final 2026 nation table: medals plus Olympic Points (7-5-4-3-2-1 over
# placements 1-6) and the rank by Olympic Points.
# Blank rank = ties the printed rank above; blank medal columns = nation
# scored Olympic Points without winning a medal.
# rank	code	gold	silver	bronze	total	op	op_rank
1	NOR	18	12	11	41	295.0	1
2	USA	12	12	9	33	254.5	2
3	ITA	10	6	14	30	220.0	3
4	GER	8	10	8	26	192.0	4
5	JPN	5	7	12	24	145.5	9
6	FRA	8	9	6	23	178.5	5
7	SUI	6	9	8	23	161.0	6
8	CAN	5	7	9	21	152.0	6
9	NED	10	7	3	20	146.0	8
10	SWE	8	6	4	18	122.5	11
11	AUT	5	8	5	18	131.0	10
12	CHN	5	4	6	15	113.0	12
13	KOR	3	4	3	10	65.0	13
14	AUS	3	2	1	6	48.0	15
15	FIN	0	1	5	6	44.0	16
16	GBR	3	1	1	5	53.0	14
17	CZE	2	2	1	5	38.0	17
18	SLO	2	1	1	4	29.0	18
19	POL	0	3	1	4	28.0	19
20	ESP	1	0	2	3	17.0	21
21	NZL	0	2	1	3	16.0	22
22	LAT	0	1	1	2	22.0	20
23	BUL	0	0	2	2	11.0	25
24	BRA	1	0	0	1	7.0	28
	KAZ	1	0	0	1	8.0	26
26	DEN	0	1	0	1	5.0	30
	EST	0	1	0	1	6.0	29
	GEO	0	1	0	1	8.0	26
	AIN	0	1	0	1	13.0	23
29	BEL	0	0	1	1	12.0	24
	SVK					3.0	31
	HUN					3.0	31
	ROM					2.0	33
	UKR					2.0	33
	LIT					1.0	35
)TSV";

inline constexpr std::string_view speedskating_men = R"TSV(# Long-track speedskating medals per nation and Games, men, 1924-2026.
# Row 1: nation codes; row 2: all-time totals; blank cell = 0 medals.
# The totals row is authoritative; the 1988 grid entries book one medal
# under BLR rather than SOV so that every column sums to its total.
year	NOR	NED	USA	FIN	SWE	CAN	AUT	SOV	GER	JPN	KOR	RUS	BLR	BEL	ITA	POL	CHN	CZE	DEN
total	85	86	45	17	18	20	3	28	10	12	16	7	2	3	8	3	5	2	1
1924	6		1	6
1928	6		1	4
1932	2		5			5
1936	6		1	4			1
1948	6		2	2	3
1952	6	3	2		1	1
1956	2			1	2			7
1960	3	1	1		1			6
1964	7	1	1		1			3
1968	4	4	1		2				1
1972	4	4			2			1	1
1976	4	5	2					4
1980	6	2	5			1		2
1984	1				2	3		4	2	1
1988		4	1		2		2	1	3	1			1
1992	5	4							2	3	1
1994	5	4	1								1	3	1
1998	1	9				2				2				1
2002	2	6	5						1	1
2006		5	7			1					1	1			3
2010	1	4	4			1				2	4	2
2014		13				2				1						2
2018	4	7				2					5			1	1		1
2022	3	5	1		2	1				1	4	1		1	1		1
2026	1	5	4			1									3	1	3	2	1
)TSV";

inline constexpr std::string_view speedskating_ladies = R"TSV(# Long-track speedskating medals per nation and Games, ladies, 1960-2026.
# Row 1: nation codes; row 2: all-time totals; blank cell = 0 medals.
# The totals row is authoritative; the 2018 CZE entry counts one medal
# so that the column sums to its total.
# The 1964 KOR silver is annotated (NKR): won by a North Korean skater,
# tabulated under KOR here; split-mode aggregation reattributes
# annotated cells to the code in parentheses.
year	NOR	NED	USA	FIN	SWE	CAN	AUT	SOV	GER	JPN	KOR	RUS	ITA	POL	CHN	CZE	KAZ
total	5	60	33	2	0	27	3	30	61	17	5	9	4	4	7	7	1
1960			1	1				6	2					2
1964			2					10			1(NKR)
1968		5	4	1				2
1972		5	4					2	1
1976	1		4			1		5	1
1980	1	2	3					2	4
1984								3	9
1988		3	2						10
1992			2				1		9	1					2
1994			2			1	2		5	1		2			1
1998		2	2			3			6	1							1
2002		2	3			3			7
2006		4				7			3			2			2
2010		3				4			4	1	1			1	1	3
2014		10									1	3		1	1	2
2018		9	1							6	2	1				1
2022		7	2			4				4		1	2			1
2026	3	8	1			4				3			2
)TSV";

inline constexpr std::string_view populations_2018 = R"TSV(# Sample national populations (2018 figures).
# code	population
LIE	37531
NOR	5195921
)TSV";

inline constexpr std::string_view medals_2018 = R"TSV(# Sample total medal counts (2018 Games).
# code	medals
LIE	1
NOR	39
)TSV";

inline constexpr std::string_view regress_example = R"TSV(# Norwegian medal share per Games as a grouped-binomial dataset:
# successes = medals won, trials = 3 * events (the medal chances),
# decade = (year - 1976) / 10 as a centered time covariate.
code	successes	trials	decade
1924	17	48	-5.2
1928	15	42	-4.8
1932	10	42	-4.4
1936	15	51	-4
1948	10	66	-2.8
1952	16	66	-2.4
1956	4	72	-2
1960	6	81	-1.6
1964	15	102	-1.2
1968	14	105	-0.8
1972	12	105	-0.4
1976	7	111	0
1980	10	114	0.4
1984	9	117	0.8
1988	5	138	1.2
1992	20	171	1.6
1994	26	183	1.8
1998	25	204	2.2
2002	25	234	2.6
2006	19	252	3
2010	23	258	3.4
2014	26	294	3.8
2018	39	306	4.2
2022	37	327	4.6
2026	41	348	5
)TSV";

}  // namespace medalstats::embedded
