"""Published reference tables for the verification command.

All values are stored as decimal strings, exactly as printed in the
reference publication, so transcription stays auditable; nothing here is
derived from this package's own solvers.  ``fraction_entries`` carries
the exact rational weights for the uniform-grid rules where those are
published in closed form."""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ["GoldenTable", "TABLES", "table_ids"]


@dataclass(frozen=True)
class GoldenTable:
    """Reference instance: published coefficient digits and norm constant."""

    table_id: str
    m: int
    N: int
    eta0: str
    entries: tuple  # (index, decimal string), left boundary layer or full rule
    norm_text: str | None = None  # published norm constant, when available
    full: bool = False  # True when entries cover every node of the rule
    flagged: tuple = ()  # indices compared one digit looser (long print)
    fraction_entries: tuple = ()  # (numerator, denominator) when exact


TABLES: dict[str, GoldenTable] = {}


def _add(tbl: GoldenTable) -> None:
    TABLES[tbl.table_id] = tbl


def table_ids() -> tuple:
    return tuple(sorted(TABLES))


_add(GoldenTable(
    table_id="table1",
    m=2,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00177612633884071008"),
        (1, "0.00319454403039647954"),
        (2, "0.00337052181497334175"),
        (3, "0.00332336870971015344"),
        (4, "0.00333600334618604447"),
        (5, "0.00333261790554566866"),
        (6, "0.00333352503163128086"),
        (7, "0.00333328196792920787"),
        (8, "0.00333334709665188764"),
    ),
))

_add(GoldenTable(
    table_id="table2",
    m=3,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00175247906611553142"),
        (1, "0.00324264900163471085"),
        (2, "0.00333892060971646866"),
        (3, "0.00333236955552006215"),
        (4, "0.00333368616893237390"),
        (5, "0.00333318408917128015"),
        (6, "0.00333339747877195358"),
        (7, "0.00333330571886293306"),
        (8, "0.00333334522322914572"),
    ),
))

_add(GoldenTable(
    table_id="table3",
    m=4,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00174455012038852683"),
        (1, "0.00326634746379700186"),
        (2, "0.00330774531081996009"),
        (3, "0.00335699483364953318"),
        (4, "0.00331942429918189420"),
        (5, "0.00334093116706873427"),
        (6, "0.00332924765792690917"),
        (7, "0.00333552260766573748"),
        (8, "0.00333216117670071227"),
        (9, "0.00333396080026924074"),
        (10, "0.00333299745834218190"),
        (11, "0.00333351312116039613"),
        (12, "0.00333323709636443753"),
        (13, "0.00333338484710726915"),
        (14, "0.00333330575901727716"),
        (15, "0.00333334809332522744"),
    ),
))

_add(GoldenTable(
    table_id="table4",
    m=5,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00173901538774817543"),
        (1, "0.00328716890432268279"),
        (2, "0.00326911260567167412"),
        (3, "0.00340205381465105221"),
        (4, "0.00328232898469587043"),
        (5, "0.00336635018632553123"),
        (6, "0.00331284808226362786"),
        (7, "0.00334587152301716133"),
        (8, "0.00332569334718594541"),
        (9, "0.00333798181479271212"),
        (10, "0.00333050638482074723"),
        (11, "0.00333505224863080752"),
        (12, "0.00333228820948218315"),
        (13, "0.00333396877152254017"),
        (14, "0.00333294698744021598"),
        (15, "0.00333356823085626853"),
        (16, "0.00333319051620654561"),
        (17, "0.00333342016578285375"),
        (18, "0.00333328053942885252"),
        (19, "0.00333336543188980042"),
        (20, "0.00333331381749472885"),
        (21, "0.00333334519891226771"),
    ),
))

_add(GoldenTable(
    table_id="table5",
    m=6,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00173498886058381026"),
        (1, "0.00330520593286011352"),
        (2, "0.00322620390097277555"),
        (3, "0.00346783504823977116"),
        (4, "0.00321158077766250064"),
        (5, "0.00342625617820782061"),
        (6, "0.00326815998330420462"),
        (7, "0.00337747643535115270"),
        (8, "0.00330385537900635393"),
        (9, "0.00335290464626403816"),
        (10, "0.00332037008745176751"),
        (11, "0.00334191131490927107"),
        (12, "0.003327659419014779572"),
        (13, "0.00333708573208910388"),
        (14, "0.00333085188184676641"),
        (15, "0.00333497426498772165"),
        (16, "0.00333224823220328272"),
        (17, "0.00333405087626146100"),
        (18, "0.00333285884589705156"),
        (19, "0.00333364709595060379"),
        (20, "0.00333312585271306499"),
        (21, "0.00333347053324047546"),
        (22, "0.00333324260768654442"),
        (23, "0.00333339332712609729"),
        (24, "0.00333329366147357165"),
        (25, "0.00333335956698815529"),
        (26, "0.00333331598590751689"),
        (27, "0.00333334480459741380"),
    ),
    flagged=(12,),
))

_add(GoldenTable(
    table_id="table6",
    m=7,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00173205877707359127"),
        (1, "0.00332034204314634415"),
        (2, "0.00318230520695443787"),
        (3, "0.00355132503340265203"),
        (4, "0.00309977448873935734"),
        (5, "0.00354150500848728542"),
        (6, "0.00316818905922230260"),
        (7, "0.00345627307134070750"),
        (8, "0.00324460285490503001"),
        (9, "0.00339643943424144824"),
        (10, "0.00328876219893682112"),
        (11, "0.00336471020635444449"),
        (12, "0.00331127918647367579"),
        (13, "0.00334882331050388661"),
        (14, "0.00332245757624453130"),
        (15, "0.00334096810776062514"),
        (16, "0.00332797414827915069"),
        (17, "0.00333709504135639172"),
        (18, "0.00333069296984364163"),
        (19, "0.00333518660336370406"),
        (20, "0.00333203252906371234"),
        (21, "0.00333424636193460625"),
        (22, "0.00333269248328614613"),
        (23, "0.00333378314247101608"),
        (24, "0.00333301761482745647"),
        (25, "0.00333355493435702833"),
        (26, "0.00333317779284220016"),
        (27, "0.00333344250631211799"),
        (28, "0.00333325670544635996"),
        (29, "0.00333338711800696554"),
        (30, "0.00333329558217999618"),
        (31, "0.00333335983065088640"),
        (32, "0.00333331473501844551"),
        (33, "0.00333334638738364948"),
    ),
))

_add(GoldenTable(
    table_id="table7",
    m=8,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172995290066120350"),
        (1, "0.00333261654096956311"),
        (2, "0.00314030615358630034"),
        (3, "0.00364680181687277409"),
        (4, "0.00294599819613147818"),
        (5, "0.00373067122924529534"),
        (6, "0.00297727240591131934"),
        (7, "0.00362534555471145307"),
        (8, "0.00310592534617643848"),
        (9, "0.00350552648624077583"),
        (10, "0.00320487233533179992"),
        (11, "0.00342842342134998057"),
        (12, "0.00326323297211348103"),
        (13, "0.00338490036159433393"),
        (14, "0.00329544249146043423"),
        (15, "0.00336115859898192848"),
        (16, "0.00331290610817136431"),
        (17, "0.00334832702306404860"),
        (18, "0.00332232883088807872"),
        (19, "0.00334140963871753226"),
        (20, "0.00332740619898615369"),
        (21, "0.00333768315455876029"),
        (22, "0.00333014109574784269"),
        (23, "0.00333567603784529139"),
        (24, "0.00333161408331454461"),
        (25, "0.00333459504509005457"),
        (26, "0.00333240739717116319"),
        (27, "0.00333401285268273812"),
        (28, "0.00333283465264497077"),
        (29, "0.00333369930144181951"),
        (30, "0.00333306475936511862"),
        (31, "0.00333353043240642612"),
        (32, "0.00333318868772800817"),
        (33, "0.00333343948477634317"),
        (34, "0.00333325543170061418"),
        (35, "0.00333339050320497157"),
        (36, "0.00333329137793257419"),
        (37, "0.00333336412325119880"),
        (38, "0.00333331073745712191"),
        (39, "0.00333334991582712020"),
        (40, "0.00333332116389597219"),
    ),
))

_add(GoldenTable(
    table_id="table8",
    m=9,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172847784910360447"),
        (1, "0.00334216427951079832"),
        (2, "0.00310265417511838644"),
        (3, "0.00374645947596537845"),
        (4, "0.00275792168171570242"),
        (5, "0.00400138156396844176"),
        (6, "0.00266165221372250548"),
        (7, "0.00394079887384133675"),
        (8, "0.00282156182791894007"),
        (9, "0.00374603753952685103"),
        (10, "0.00300894501757551301"),
        (11, "0.00358457992357594231"),
        (12, "0.00314035977572450425"),
        (13, "0.00348084679101216452"),
        (14, "0.00322087398274449081"),
        (15, "0.00341893779189990479"),
        (16, "0.00326822729185132696"),
        (17, "0.00338282511219261974"),
        (18, "0.00329572154562808534"),
        (19, "0.00336191228831355167"),
        (20, "0.00331161983320458289"),
        (21, "0.00334982981298158293"),
        (22, "0.00332080076136125273"),
        (23, "0.00334285432190737266"),
        (24, "0.00332610031017101433"),
        (25, "0.00333882817755420089"),
        (26, "0.00332915897604222655"),
        (27, "0.00333650452957059022"),
        (28, "0.00333092422572131367"),
        (29, "0.00333516349327706089"),
        (30, "0.00333194299096395421"),
        (31, "0.00333438955334958306"),
        (32, "0.00333253094060154966"),
        (33, "0.00333394289767582404"),
        (34, "0.00333287025750894230"),
        (35, "0.00333368512427696033"),
        (36, "0.00333306608365147515"),
        (37, "0.00333353635843483279"),
        (38, "0.00333317909856898933"),
        (39, "0.00333345050289666260"),
        (40, "0.00333324432158157594"),
        (41, "0.00333340095406794224"),
        (42, "0.00333328196299562843"),
        (43, "0.00333337235851711259"),
        (44, "0.00333330368655589561"),
        (45, "0.00333335585549280241"),
        (46, "0.00333331622362661400"),
        (47, "0.00333334633129049714"),
    ),
))

_add(GoldenTable(
    table_id="table9",
    m=10,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172749278862645234"),
        (1, "0.00334915954552527705"),
        (2, "0.00307141154907661477"),
        (3, "0.00384087716305041600"),
        (4, "0.00255327063613243166"),
        (5, "0.00434013033335869961"),
        (6, "0.00221013903097713541"),
        (7, "0.00444946400666106578"),
        (8, "0.00231492992409806705"),
        (9, "0.00420985817056583358"),
        (10, "0.00260680747387077026"),
        (11, "0.00392158564879464832"),
        (12, "0.00286380539858292753"),
        (13, "0.00370486410231191268"),
        (14, "0.00304088010987428129"),
        (15, "0.00356281566915249473"),
        (16, "0.00315360445472180508"),
        (17, "0.00347393491400228088"),
        (18, "0.00322341661691745051"),
        (19, "0.00341922625493328018"),
        (20, "0.00326623022080639272"),
        (21, "0.00338574919280914013"),
        (22, "0.00329239374555605829"),
        (23, "0.00336530759722583348"),
        (24, "0.00330836190455046297"),
        (25, "0.00335283526564426801"),
        (26, "0.00331810309402904888"),
        (27, "0.00334522746373694056"),
        (28, "0.00332404459372417715"),
        (29, "0.00334058737008624209"),
        (30, "0.00332766830567799599"),
        (31, "0.00333775742286366819"),
        (32, "0.00332987835336878476"),
        (33, "0.00333603148905263082"),
        (34, "0.00333122621755866373"),
        (35, "0.00333497887821597101"),
        (36, "0.00333204825076180440"),
        (37, "0.00333433691406739092"),
        (38, "0.00333254959049473769"),
        (39, "0.00333394539453196409"),
        (40, "0.00333285534630910409"),
        (41, "0.00333370661560394268"),
        (42, "0.00333304181986959795"),
        (43, "0.00333356098973720558"),
        (44, "0.00333315554587373269"),
        (45, "0.00333347217581801177"),
        (46, "0.00333322490478845213"),
        (47, "0.00333341801022001505"),
        (48, "0.00333326720521970105"),
        (49, "0.00333338497584858724"),
        (50, "0.00333329300329463880"),
        (51, "0.00333336482893367433"),
        (52, "0.00333330873695621772"),
        (53, "0.00333335254178659839"),
        (54, "0.00333331833256004469"),
        (55, "0.00333334504813390320"),
    ),
))

_add(GoldenTable(
    table_id="table10",
    m=11,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172689334490066565"),
        (1, "0.00335378561374918185"),
        (2, "0.00304832508611045170"),
        (3, "0.00391935697738649923"),
        (4, "0.00236091789799528996"),
        (5, "0.00470103221229688833"),
        (6, "0.00166606164689116412"),
        (7, "0.00513715438246413703"),
        (8, "0.00155687727226540244"),
        (9, "0.00496522549139354527"),
        (10, "0.00190545757664787945"),
        (11, "0.00454262920324724638"),
        (12, "0.00233068337371350425"),
        (13, "0.00415339159536806206"),
        (14, "0.00266841337297767427"),
        (15, "0.00386950335147916675"),
        (16, "0.00290248747287229047"),
        (17, "0.00367878243460793137"),
        (18, "0.00305674037361827340"),
        (19, "0.00355459988011267817"),
        (20, "0.00315642482727045543"),
        (21, "0.00347472666712902671"),
        (22, "0.00322035045788260487"),
        (23, "0.00342360164155868860"),
        (24, "0.00326121936040494949"),
        (25, "0.00339094085206410810"),
        (26, "0.00328731578129565660"),
        (27, "0.00337009186182822834"),
        (28, "0.00330397127017939317"),
        (29, "0.00335678702055923429"),
        (30, "0.00331459921621225224"),
        (31, "0.00334829754279374992"),
        (32, "0.00332138043174862451"),
        (33, "0.00334288089094969269"),
        (34, "0.00332570708681864833"),
        (35, "0.00333942490198512218"),
        (36, "0.00332846761136009168"),
        (37, "0.00333721989298164747"),
        (38, "0.00333022889296381827"),
        (39, "0.00333581304546978635"),
        (40, "0.00333135263111543830"),
        (41, "0.00333491544485158395"),
        (42, "0.00333206960132156587"),
        (43, "0.00333434275558700776"),
        (44, "0.00333252704428838619"),
        (45, "0.00333397736710399180"),
        (46, "0.00333281890305696659"),
        (47, "0.00333374424114699843"),
        (48, "0.00333300511542151927"),
        (49, "0.00333359550162011932"),
        (50, "0.00333312392303583896"),
        (51, "0.00333350060250695466"),
        (52, "0.00333319972492547481"),
        (53, "0.00333344005477077078"),
        (54, "0.00333324808820998967"),
        (55, "0.00333340142397405117"),
        (56, "0.00333327894505666322"),
        (57, "0.00333337677667015449"),
        (58, "0.00333329863240825021"),
        (59, "0.00333336105114438844"),
        (60, "0.00333331119337459038"),
        (61, "0.00333335101791066748"),
        (62, "0.00333331920754931007"),
        (63, "0.00333334461648534207"),
    ),
))

_add(GoldenTable(
    table_id="table11",
    m=12,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172660093000204434"),
        (1, "0.00335622016635424541"),
        (2, "0.00303488707201474333"),
        (3, "0.00397016939076339731"),
        (4, "0.00222172391357403828"),
        (5, "0.00499378828442308939"),
        (6, "0.00117134786383522544"),
        (7, "0.00583516570203082313"),
        (8, "0.00070537581513706783"),
        (9, "0.00589276164637635086"),
        (10, "0.00097691145372704574"),
        (11, "0.00541764827809579119"),
        (12, "0.00154000801804920969"),
        (13, "0.00484769113306215419"),
        (14, "0.00207043279270397406"),
        (15, "0.00437783417724906036"),
        (16, "0.00247418267818456252"),
        (17, "0.00403747731479976406"),
        (18, "0.00275760059774337822"),
        (19, "0.00380333655344864095"),
        (20, "0.00295003782640532812"),
        (21, "0.00364570570477646406"),
        (22, "0.00307887414398914889"),
        (23, "0.00354055563717261057"),
        (24, "0.00316461152396595462"),
        (25, "0.00347069038125884784"),
        (26, "0.00322151976711594156"),
        (27, "0.00342434860282943662"),
        (28, "0.00325925036543305965"),
        (29, "0.00339363262285636622"),
        (30, "0.00328425393283165749"),
        (31, "0.00337328012014849898"),
        (32, "0.00330081999773997306"),
        (33, "0.00335979634546885836"),
        (34, "0.00331179481824981668"),
        (35, "0.00335086371649026079"),
        (36, "0.00331906522131345626"),
        (37, "0.00334494624845792310"),
        (38, "0.00332388150649666917"),
        (39, "0.00334102623365402826"),
        (40, "0.00332707203566076212"),
        (41, "0.00333842944024015643"),
        (42, "0.00332918558244974745"),
        (43, "0.00333670921153828293"),
        (44, "0.00333058568684464716"),
        (45, "0.00333556965838687970"),
        (46, "0.00333151317572930858"),
        (47, "0.00333481476987879354"),
        (48, "0.00333212758377888206"),
        (49, "0.00333431469968656027"),
        (50, "0.00333253459373417958"),
        (51, "0.00333398343198778386"),
        (52, "0.00333280421438103343"),
        (53, "0.00333376398622498520"),
        (54, "0.00333298282252256406"),
        (55, "0.00333361861605357889"),
        (56, "0.00333310114012289132"),
        (57, "0.00333352231669313408"),
        (58, "0.00333317951871399489"),
        (59, "0.00333345852391701871"),
        (60, "0.00333323144001324420"),
        (61, "0.00333341626487956293"),
        (62, "0.00333326583488148334"),
        (63, "0.00333338827070287737"),
        (64, "0.00333328861949931687"),
        (65, "0.00333336972617429080"),
        (66, "0.00333330371299542040"),
        (67, "0.00333335744149293259"),
        (68, "0.00333331371156666169"),
        (69, "0.00333334930359957163"),
        (70, "0.00333332033504383217"),
        (71, "0.00333334391271425501"),
    ),
))

_add(GoldenTable(
    table_id="table12",
    m=13,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172655548945567044"),
        (1, "0.00335662901376447258"),
        (2, "0.00303238425807657517"),
        (3, "0.00398073517633032120"),
        (4, "0.00218920482037733280"),
        (5, "0.00507104524959419857"),
        (6, "0.00102336156051060256"),
        (7, "0.00607199798241084696"),
        (8, "0.00037867881870999653"),
        (9, "0.00629239692582258769"),
        (10, "0.00053211065682692867"),
        (11, "0.00587832107921238828"),
        (12, "0.00108774569344314697"),
        (13, "0.00527471154107237576"),
        (14, "0.00167844383373434332"),
        (15, "0.00473043759244898944"),
        (16, "0.00216162520663729902"),
        (17, "0.00431159258197410437"),
        (18, "0.00251908554798301532"),
        (19, "0.00400965449172913550"),
        (20, "0.00277237192137831871"),
        (21, "0.00379816301931711370"),
        (22, "0.00294841399870425801"),
        (23, "0.00365193776947454155"),
        (24, "0.00306969888569782702"),
        (25, "0.00355143697213385530"),
        (26, "0.00315292244059992812"),
        (27, "0.00348255132276115587"),
        (28, "0.00320992302093593156"),
        (29, "0.00343539498005851424"),
        (30, "0.00324892979162245131"),
        (31, "0.00340313244846696006"),
        (32, "0.00327561242680296621"),
        (33, "0.00338106562394459128"),
        (34, "0.00329386137938002601"),
        (35, "0.00336597430528210186"),
        (36, "0.00330634125957574669"),
        (37, "0.00335565407117066211"),
        (38, "0.00331487552014629517"),
        (39, "0.00334859674230775176"),
        (40, "0.00332071149652304087"),
        (41, "0.00334377075895046149"),
        (42, "0.00332470227406376349"),
        (43, "0.00334047064592444503"),
        (44, "0.00332743125080413949"),
        (45, "0.00333821396235558649"),
        (46, "0.00332929737855920021"),
        (47, "0.00333667079868275828"),
        (48, "0.00333057347222005968"),
        (49, "0.00333561555424564661"),
        (50, "0.00333144608900867865"),
        (51, "0.00333489395837593862"),
        (52, "0.00333204280063615644"),
        (53, "0.00333440051769216630"),
        (54, "0.00333245084313764205"),
        (55, "0.00333406309378899346"),
        (56, "0.00333272987017358315"),
        (57, "0.00333383235706368672"),
        (58, "0.00333292067403627449"),
        (59, "0.00333367457501187563"),
        (60, "0.00333305114925564172"),
        (61, "0.00333356668071934869"),
        (62, "0.00333314037062970202"),
        (63, "0.00333349290060179606"),
        (64, "0.00333320138185937509"),
        (65, "0.00333344244838961507"),
        (66, "0.00333324310246929006"),
        (67, "0.00333340794823161848"),
        (68, "0.00333327163179578226"),
        (69, "0.00333338435638400590"),
        (70, "0.00333329114067812168"),
        (71, "0.00333336822384125740"),
        (72, "0.00333330448121352504"),
        (73, "0.00333335719210945782"),
        (74, "0.00333331360371894311"),
        (75, "0.00333334964840674512"),
        (76, "0.00333331984185726252"),
        (77, "0.00333334448988298376"),
    ),
))

_add(GoldenTable(
    table_id="table13",
    m=14,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172671049778565797"),
        (1, "0.00335516395507917580"),
        (2, "0.00304193627584372803"),
        (3, "0.00393776327125170017"),
        (4, "0.00233007712879415692"),
        (5, "0.00471527133757507641"),
        (6, "0.00174497854628782157"),
        (7, "0.00485675294324682823"),
        (8, "0.00212747598467839435"),
        (9, "0.00408453051443764890"),
        (10, "0.00303849317411607795"),
        (11, "0.00326150825980108299"),
        (12, "0.00365086987677036012"),
        (13, "0.00288027997265296082"),
        (14, "0.00383972630105596425"),
        (15, "0.00282694633373975373"),
        (16, "0.00380915983064439615"),
        (17, "0.00290295426940039930"),
        (18, "0.00371316819510743415"),
        (19, "0.00300351110208944757"),
        (20, "0.00361660703987917620"),
        (21, "0.00309185019337987811"),
        (22, "0.00353813630227038258"),
        (23, "0.00316025452220934915"),
        (24, "0.00347924238639198785"),
        (25, "0.00321053936117372331"),
        (26, "0.00343655097788938971"),
        (27, "0.00324664320823834275"),
        (28, "0.00340610011591843955"),
        (29, "0.00327227842278880512"),
        (30, "0.00338454689233366739"),
        (31, "0.00329038332124877627"),
        (32, "0.00336934817236508896"),
        (33, "0.00330313676378294222"),
        (34, "0.00335864987188439309"),
        (35, "0.00331210917522999367"),
        (36, "0.00335112604866268579"),
        (37, "0.00331841762354822903"),
        (38, "0.00334583703432045650"),
        (39, "0.00332285171576454862"),
        (40, "0.00334211980668418472"),
        (41, "0.00332596789711823063"),
        (42, "0.00333950753291683119"),
        (43, "0.00332815772174759486"),
        (44, "0.00333767185593130795"),
        (45, "0.00332969651611532286"),
        (46, "0.00333638193499156475"),
        (47, "0.00333077781143822645"),
        (48, "0.00333547552503919473"),
        (49, "0.00333153762035049978"),
        (50, "0.00333483860682981228"),
        (51, "0.00333207152369661671"),
        (52, "0.00333439105698931688"),
        (53, "0.00333244668671512832"),
        (54, "0.00333407657300585164"),
        (55, "0.00333271030587360587"),
        (56, "0.00333385559179154898"),
        (57, "0.00333289554541894104"),
        (58, "0.00333370031303950707"),
        (59, "0.00333302570925529457"),
        (60, "0.00333359120201437040"),
        (61, "0.00333311717256726671"),
        (62, "0.00333351453205997142"),
        (63, "0.00333318144185430803"),
        (64, "0.00333346065774556324"),
        (65, "0.00333322660248814852"),
        (66, "0.00333342280143380223"),
        (67, "0.00333325833588546756"),
        (68, "0.00333339620062519364"),
        (69, "0.00333328063425493357"),
        (70, "0.00333337750881443832"),
        (71, "0.00333329630283508029"),
        (72, "0.00333336437448481488"),
        (73, "0.00333330731280618138"),
        (74, "0.00333335514527654166"),
        (75, "0.00333331504927383940"),
        (76, "0.00333334866011226255"),
        (77, "0.00333332048552169609"),
        (78, "0.00333334410312812365"),
        (79, "0.00333332430545503779"),
        (80, "0.00333334090103430680"),
        (81, "0.00333332698963926159"),
        (82, "0.00333333865099250313"),
        (83, "0.00333332887575723863"),
        (84, "0.00333333706993697896"),
        (85, "0.00333333020109139106"),
        (86, "0.00333333595896358890"),
        (87, "0.00333333113237492521"),
        (88, "0.00333333517830670844"),
    ),
))

_add(GoldenTable(
    table_id="table14",
    m=15,
    N=300,
    eta0="0.205",
    entries=(
        (0, "0.00172702945455083193"),
        (1, "0.00335196263611974402"),
        (2, "0.00306452563504523993"),
        (3, "0.00382735744574236094"),
        (4, "0.00272471104016856072"),
        (5, "0.00362523740203732478"),
        (6, "0.00416828584678143709"),
        (7, "0.00038025393759564147"),
        (8, "0.00918605541537786417"),
        (9, "-0.0056482216521837456"),
        (10, "0.01503979792439844429"),
        (11, "-0.0102513216994999018"),
        (12, "0.01780870154874396918"),
        (13, "-0.0111516599198095529"),
        (14, "0.01717584313564491950"),
        (15, "-0.0094596822947696162"),
        (16, "0.01487372890505018792"),
        (17, "-0.0068972585187668098"),
        (18, "0.01228998089227584958"),
        (19, "-0.0044379368869592209"),
        (20, "0.01003287196894858974"),
        (21, "-0.0024157213542609094"),
        (22, "0.00825049420457872496"),
        (23, "-0.0008623772730946671"),
        (24, "0.00690738675157999725"),
        (25, "0.00029252137237138985"),
        (26, "0.00591821410669587006"),
        (27, "0.00113739105014957971"),
        (28, "0.00519802682335201819"),
        (29, "0.00175042759986189166"),
        (30, "0.00467672632259750788"),
        (31, "0.00219339925074939015"),
        (32, "0.00430050875356561753"),
        (33, "0.00251280401810681106"),
        (34, "0.00402940935773975411"),
        (35, "0.00274285983082156931"),
        (36, "0.00383420982729031424"),
        (37, "0.00290846808379631022"),
        (38, "0.00369371677971561177"),
        (39, "0.00302764878602438014"),
        (40, "0.00359261903731864099"),
        (41, "0.00311340503994861123"),
        (42, "0.00351987755666928677"),
        (43, "0.00317510611508734637"),
        (44, "0.00346754171514042525"),
        (45, "0.00321949791378515819"),
        (46, "0.00342988831851899784"),
        (47, "0.00325143564488660772"),
        (48, "0.00340279870089829129"),
        (49, "0.00327441304627985970"),
        (50, "0.003383309304493717340"),
        (51, "0.00329094390700659850"),
        (52, "0.00336928787611088775"),
        (53, "0.00330283683648456223"),
        (54, "0.00335920033583227050"),
        (55, "0.00331139305001559083"),
        (56, "0.00335194298912504867"),
        (57, "0.00331754870221566789"),
        (58, "0.00334672179022929618"),
        (59, "0.00332197730137501015"),
        (60, "0.00334296547103844503"),
        (61, "0.00332516339541746467"),
        (62, "0.00334026303961781421"),
        (63, "0.00332745558621977111"),
        (64, "0.00333831881318149643"),
        (65, "0.00332910467075450735"),
        (66, "0.00333692006675210665"),
        (67, "0.00333029108147133945"),
        (68, "0.00333591375827837438"),
        (69, "0.00333114462799414914"),
        (70, "0.00333518978378703653"),
        (71, "0.00333175870004468364"),
        (72, "0.00333466893051466329"),
        (73, "0.00333220048555005048"),
        (74, "0.00333429420994935355"),
        (75, "0.00333251832192158444"),
        (76, "0.00333402462250633817"),
        (77, "0.00333274698483095824"),
        (78, "0.00333383067161036060"),
        (79, "0.00333291149314649690"),
        (80, "0.00333369113636488924"),
        (81, "0.00333302984634137357"),
        (82, "0.00333359074969419812"),
        (83, "0.00333311499388354665"),
        (84, "0.00333351852791527129"),
        (85, "0.00333317625208569821"),
        (86, "0.00333346656897177222"),
        (87, "0.00333322032343801599"),
        (88, "0.00333342918784036036"),
        (89, "0.00333325202995283771"),
        (90, "0.00333340229451091797"),
        (91, "0.00333327484075914716"),
        (92, "0.00333338294648316812"),
        (93, "0.00333329125167301758"),
        (94, "0.00333336902681665769"),
        (95, "0.00333330305827423077"),
        (96, "0.00333335901250834411"),
        (97, "0.00333331155236741126"),
        (98, "0.00333335180785510696"),
        (99, "0.00333331766332322668"),
        (100, "0.0033333466245687503"),
        (101, "0.0033333220597643263"),
    ),
))

_add(GoldenTable(
    table_id="sard_n2",
    m=2,
    N=2,
    eta0="0",
    entries=(
        (0, "0.1875"),
        (1, "0.625"),
        (2, "0.1875"),
    ),
    norm_text="0.01398",
    full=True,
    fraction_entries=(
        (3, 16),
        (10, 16),
        (3, 16),
    ),
))

_add(GoldenTable(
    table_id="sard_n3",
    m=2,
    N=3,
    eta0="0",
    entries=(
        (0, "0.13333333333333333333"),
        (1, "0.36666666666666666667"),
        (2, "0.36666666666666666667"),
        (3, "0.13333333333333333333"),
    ),
    norm_text="0.00586",
    full=True,
    fraction_entries=(
        (4, 30),
        (11, 30),
        (11, 30),
        (4, 30),
    ),
))

_add(GoldenTable(
    table_id="sard_n4",
    m=2,
    N=4,
    eta0="0",
    entries=(
        (0, "0.098214285714285714286"),
        (1, "0.28571428571428571429"),
        (2, "0.23214285714285714286"),
        (3, "0.28571428571428571429"),
        (4, "0.098214285714285714286"),
    ),
    norm_text="0.00305",
    full=True,
    fraction_entries=(
        (11, 112),
        (32, 112),
        (26, 112),
        (32, 112),
        (11, 112),
    ),
))

_add(GoldenTable(
    table_id="sard_n5",
    m=2,
    N=5,
    eta0="0",
    entries=(
        (0, "0.078947368421052631579"),
        (1, "0.22631578947368421053"),
        (2, "0.19473684210526315789"),
        (3, "0.19473684210526315789"),
        (4, "0.22631578947368421053"),
        (5, "0.078947368421052631579"),
    ),
    norm_text="0.00188",
    full=True,
    fraction_entries=(
        (15, 190),
        (43, 190),
        (37, 190),
        (37, 190),
        (43, 190),
        (15, 190),
    ),
))

_add(GoldenTable(
    table_id="shifted_n2",
    m=2,
    N=2,
    eta0="0.205",
    entries=(
        (0, "0.27075812274368231046"),
        (1, "0.45848375451263537906"),
        (2, "0.27075812274368231046"),
    ),
    norm_text="0.00694814",
    full=True,
))

_add(GoldenTable(
    table_id="shifted_n3",
    m=2,
    N=3,
    eta0="0.205",
    entries=(
        (0, "0.17683465959328028293"),
        (1, "0.32316534040671971706"),
        (2, "0.32316534040671971706"),
        (3, "0.17683465959328028293"),
    ),
    norm_text="0.00340515",
    full=True,
))

_add(GoldenTable(
    table_id="shifted_n4",
    m=2,
    N=4,
    eta0="0.205",
    entries=(
        (0, "0.13336566440349175557"),
        (1, "0.23884578079534432589"),
        (2, "0.25557710960232783705"),
        (3, "0.23884578079534432589"),
        (4, "0.13336566440349175557"),
    ),
    norm_text="0.0020343",
    full=True,
))

_add(GoldenTable(
    table_id="shifted_n5",
    m=2,
    N=5,
    eta0="0.205",
    entries=(
        (0, "0.10653409090909090909"),
        (1, "0.19183238636363636363"),
        (2, "0.20163352272727272727"),
        (3, "0.20163352272727272727"),
        (4, "0.19183238636363636363"),
        (5, "0.10653409090909090909"),
    ),
    norm_text="0.0013408",
    full=True,
))
