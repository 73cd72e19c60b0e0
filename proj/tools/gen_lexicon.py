#!/usr/bin/env python3
"""Regenerates src/lexicon_data.cpp from the word lists below.

The tagger needs broad coverage of closed-class words and common
verbs/adjectives/adverbs so they do not leak into noun chunks; nouns are
the open class and default for unknown words, so the noun list only has to
cover irregular plurals and words whose surface form collides with the
adjective-suffix fallback (-ous/-ive/-al/-ful/-less/-ic).

Inflected forms are expanded with standard English orthography plus
irregular tables. Run from the repository root:

    python3 tools/gen_lexicon.py
"""

import os

STOPWORDS = """
a about above after again against all am an and any are aren't as at be
because been before being below between both but by can cannot can't could
couldn't did didn't do does doesn't doing don't down during each few for from
further had hadn't has hasn't have haven't having he he'd he'll he's her here
here's hers herself him himself his how how's i i'd i'll i'm i've if in into
is isn't it it's its itself let's me more most mustn't my myself no nor not of
off on once only or other ought our ours ourselves out over own same shan't
she she'd she'll she's should shouldn't so some such than that that's the
their theirs them themselves then there there's these they they'd they'll
they're they've this those through to too under until up very was wasn't we
we'd we'll we're we've were weren't what what's when when's where where's
which while who who's whom why why's with won't would wouldn't you you'd
you'll you're you've your yours yourself yourselves also just even still yet
ever never always often sometimes now then here there upon among amid via per
within without toward towards onto across around along despite unless whether
since although though however therefore thus moreover besides meanwhile
nevertheless cannot shall must may might will wo don isn aren didn doesn
hasn haven wasn weren wouldn couldn shouldn mustn
""".split()

# (base, past, participle, 3sg, gerund); None means regular orthography
IRREGULAR_VERBS = [
    ("be", "was", "been", "is", "being"), ("have", "had", "had", "has", "having"),
    ("do", "did", "done", "does", "doing"), ("say", "said", "said", None, None),
    ("go", "went", "gone", "goes", None), ("get", "got", "gotten", None, "getting"),
    ("make", "made", "made", None, None), ("know", "knew", "known", None, None),
    ("think", "thought", "thought", None, None), ("take", "took", "taken", None, None),
    ("see", "saw", "seen", None, "seeing"), ("come", "came", "come", None, "coming"),
    ("give", "gave", "given", None, None), ("find", "found", "found", None, None),
    ("tell", "told", "told", None, None), ("become", "became", "become", None, "becoming"),
    ("show", "showed", "shown", None, None), ("leave", "left", "left", None, None),
    ("feel", "felt", "felt", None, None), ("put", "put", "put", None, "putting"),
    ("bring", "brought", "brought", None, None), ("begin", "began", "begun", None, "beginning"),
    ("keep", "kept", "kept", None, None), ("hold", "held", "held", None, None),
    ("write", "wrote", "written", None, None), ("stand", "stood", "stood", None, None),
    ("hear", "heard", "heard", None, None), ("let", "let", "let", None, "letting"),
    ("mean", "meant", "meant", None, None), ("set", "set", "set", None, "setting"),
    ("meet", "met", "met", None, None), ("run", "ran", "run", None, "running"),
    ("pay", "paid", "paid", None, None), ("sit", "sat", "sat", None, "sitting"),
    ("speak", "spoke", "spoken", None, None), ("lie", "lay", "lain", None, "lying"),
    ("lead", "led", "led", None, None), ("read", "read", "read", None, None),
    ("grow", "grew", "grown", None, None), ("lose", "lost", "lost", None, None),
    ("fall", "fell", "fallen", None, None), ("send", "sent", "sent", None, None),
    ("build", "built", "built", None, None), ("understand", "understood", "understood", None, None),
    ("draw", "drew", "drawn", None, None), ("break", "broke", "broken", None, None),
    ("spend", "spent", "spent", None, None), ("cut", "cut", "cut", None, "cutting"),
    ("rise", "rose", "risen", None, "rising"), ("drive", "drove", "driven", None, None),
    ("buy", "bought", "bought", None, None), ("wear", "wore", "worn", None, None),
    ("choose", "chose", "chosen", None, "choosing"), ("seek", "sought", "sought", None, None),
    ("throw", "threw", "thrown", None, None), ("catch", "caught", "caught", None, None),
    ("deal", "dealt", "dealt", None, None), ("win", "won", "won", None, "winning"),
    ("forget", "forgot", "forgotten", None, "forgetting"), ("lay", "laid", "laid", None, None),
    ("prove", "proved", "proven", None, "proving"), ("hang", "hung", "hung", None, None),
    ("fly", "flew", "flown", None, None), ("strike", "struck", "struck", None, "striking"),
    ("shoot", "shot", "shot", None, None), ("spread", "spread", "spread", None, None),
    ("fight", "fought", "fought", None, None), ("teach", "taught", "taught", None, None),
    ("sell", "sold", "sold", None, None), ("feed", "fed", "fed", None, None),
    ("bear", "bore", "borne", None, None), ("beat", "beat", "beaten", None, None),
    ("bend", "bent", "bent", None, None), ("bind", "bound", "bound", None, None),
    ("bite", "bit", "bitten", None, "biting"), ("blow", "blew", "blown", None, None),
    ("burst", "burst", "burst", None, None), ("cast", "cast", "cast", None, None),
    ("cling", "clung", "clung", None, None), ("creep", "crept", "crept", None, None),
    ("dig", "dug", "dug", None, "digging"), ("drink", "drank", "drunk", None, None),
    ("eat", "ate", "eaten", None, None), ("flee", "fled", "fled", None, "fleeing"),
    ("freeze", "froze", "frozen", None, "freezing"), ("hide", "hid", "hidden", None, "hiding"),
    ("hit", "hit", "hit", None, "hitting"), ("hurt", "hurt", "hurt", None, None),
    ("kneel", "knelt", "knelt", None, None), ("lend", "lent", "lent", None, None),
    ("ride", "rode", "ridden", None, "riding"), ("ring", "rang", "rung", None, None),
    ("shake", "shook", "shaken", None, "shaking"), ("shine", "shone", "shone", None, "shining"),
    ("shrink", "shrank", "shrunk", None, None), ("shut", "shut", "shut", None, "shutting"),
    ("sing", "sang", "sung", None, None), ("sink", "sank", "sunk", None, None),
    ("sleep", "slept", "slept", None, None), ("slide", "slid", "slid", None, "sliding"),
    ("spin", "spun", "spun", None, "spinning"), ("steal", "stole", "stolen", None, None),
    ("stick", "stuck", "stuck", None, None), ("sting", "stung", "stung", None, None),
    ("swear", "swore", "sworn", None, None), ("sweep", "swept", "swept", None, None),
    ("swim", "swam", "swum", None, "swimming"), ("swing", "swung", "swung", None, None),
    ("tear", "tore", "torn", None, None), ("wake", "woke", "woken", None, "waking"),
    ("weep", "wept", "wept", None, None), ("withdraw", "withdrew", "withdrawn", None, None),
    ("arise", "arose", "arisen", None, "arising"), ("undergo", "underwent", "undergone", "undergoes", None),
    ("overcome", "overcame", "overcome", None, "overcoming"), ("uphold", "upheld", "upheld", None, None),
    ("overthrow", "overthrew", "overthrown", None, None), ("undertake", "undertook", "undertaken", None, "undertaking"),
]

REGULAR_VERBS = """
accept access accompany accuse achieve acknowledge acquire act add address
adjust admit adopt advance advise affect afford agree aim allege allow
announce answer anticipate apologize appeal appear apply appoint approach
approve argue arrest arrive ask assault assert assess assign assist assume
assure attach attack attempt attend attract authorize avoid back ban base
battle behave believe belong benefit bid blame block board boost borrow
bother brief broadcast burn call calm campaign cancel capture care carry
cause cease celebrate challenge change charge chase check cheer cite claim
clarify clash clean clear climb close collapse collect combine comment
commit communicate compare compete complain complete comply concede concern
conclude condemn conduct confirm confront connect consider consist
consolidate constitute construct consult contain contend continue contract
contribute control convene convict convince cooperate coordinate cope copy
correct cost counter count cover crack crash create criticize cross crush
cry damage dance dare debate decide declare decline decrease defeat defend
define delay deliver demand demonstrate deny depart depend deploy describe
deserve design destroy detail detain deter determine develop die differ
disagree disappear discover discuss dismiss display dispute disrupt dissolve
distribute divide dominate donate double doubt download drag drop drown earn
ease echo edit elect eliminate emerge emphasize employ enable encounter
encourage end endorse endure enforce engage enhance enjoy ensure enter
escalate escape establish estimate evacuate evaluate examine exceed exchange
exclude execute exist expand expect expel experience explain explode explore
export expose express extend face fail favor fear feature file fill finance
finish fire fix flood flow focus follow force forecast form foster frame
free fuel fulfill fund gain gather generate govern grab grant greet guard
guess guide halt hamper handle happen harm head help hesitate highlight
hint hire honor hope host house hover hunt identify ignite ignore
illustrate imagine impact implement imply import impose improve include
increase indicate infect inform initiate injure insist inspect inspire
install insult intend intensify intercept interfere interview introduce
invade invest investigate invite involve isolate issue join judge jump
justify kick kidnap kill knock label lack land last laugh launch learn
levy liberate lift like limit link list listen live load lobby locate lock
look loom maintain manage march mark marry match matter measure mention
merge migrate mobilize monitor motivate mount move murder name need
negotiate note notice notify obtain occupy occur offer open operate oppose
order organize oust outline overhaul oversee owe own participate pass
pause perform permit persuade phone pick plan play plead pledge point
portray pose position possess postpone pour praise predict prefer prepare
present preserve press pressure prevent print proceed process produce
prohibit promise promote prompt propose prosecute protect protest provide
provoke publish pull punish purchase pursue push qualify question quit
quote raid raise rally range rank reach react realize reassure rebuild
recall receive recognize recommend record recover recruit reduce refer
reflect refuse regain regard register regret regulate reiterate reject
relate release relocate rely remain remark remember remind remove renew
reopen repair repeat replace reply report represent request require rescue
resign resist resolve respect respond restore restrict result resume
retain retaliate retire retreat return reveal review revise revive reward
rule rush sanction save scan schedule score seal search secure seem seize
sentence separate serve settle share shell shift shock shout sign signal
slam smash smile sound spark sponsor spur stabilize stage start starve
state stay stem step stop storm strain strengthen stress stretch struggle
study submit succeed suffer suggest summon supply support suppress surge
surround survive suspect suspend sustain talk target tax terminate test
testify thank threaten tighten time top topple torture total touch tour
track trade train transfer transform translate transport travel treat
trigger trust try turn undermine unfold unify unite unveil update upgrade
urge use value verify veto view violate visit voice vote vow wait walk
want warn wash watch wave weaken weigh welcome widen wish witness wonder
work worry wound wrap yield
""".split()

ADJECTIVES = """
able abrupt absent abstract absurd acute adequate afraid aggressive alive
alleged alone ambitious ancient angry annual anonymous apparent appropriate
armed artificial asleep automatic available average awful awkward bad bare
basic beautiful big bitter bizarre black bland blind blue bold brave brief
bright brilliant broad brown brutal busy calm capable careful cautious cheap
chief chronic civic civil classic clean clear clever close cold collective
colonial common competitive complex comprehensive confident conservative
considerable consistent constant contemporary controversial convenient
conventional correct corrupt covert crazy criminal crucial crude cruel
curious current cyber daily dangerous dark dead deadly deaf dear decent
deep deliberate democratic dense desperate devastating different difficult
diplomatic dire direct dirty distant distinct diverse divine domestic
dominant double dramatic drastic dry dual due dumb eager early eastern easy
economic effective efficient elderly electoral electric electronic eligible
elite emergency eminent emotional empty enormous entire equal essential
ethical ethnic everyday evident exact excellent exclusive executive exempt
existing expensive explicit express external extra extreme fair fake famous
far fast federal fellow female fierce final financial fine firm first
fiscal fit flat flexible fluid fond foreign formal former fragile frank
free frequent fresh friendly front full fundamental funny furious future
general generous genetic gentle genuine giant glad global golden good grand
grave gray great green grim gross guilty happy hard harsh healthy heavy
high historic hollow holy honest hostile hot huge human humanitarian humble
hungry ideal illegal immediate imminent immune imperial implicit important
independent indigenous industrial inevitable infamous influential informal
inner innocent intense interim internal international intimate invisible
joint judicial junior keen key kind large late latter lazy leading left
legal legislative legitimate lethal liable liberal light likely limited
linear liquid little live lively local lone long loose loud low loyal lucky
mad main major male marine maritime mass massive mature mean medical medium
mental mere middle mild military minor mobile moderate modern modest
monetary moral mortal multiple municipal mutual naked narrow nasty national
native naval near neat necessary negative nervous neutral new next nice
noble normal northern notable notorious nuclear obvious odd offensive
official old online only open opposite oral orange ordinary organic
original orthodox other outdoor outer outstanding overall overdue overseas
painful pale parallel partial particular past patient peaceful pending
perfect permanent personal pink plain pleasant polite political poor
popular positive possible postal potent potential powerful practical
precise pregnant premature premier present presidential pretty previous
primary prime principal prior private pro probable professional profound
prominent prompt prone proper proud provincial public punitive pure purple
quick quiet radical rapid rare raw ready real rear recent red regional
regular relevant reluctant remote renewable repeated residential
responsible retail rich right rigid ripe rival robust rogue rough round
royal rural sacred sad safe salient same secret secular secure senior
sensitive separate serious severe shallow sharp sheer short shy sick
significant silent silly similar simple sincere single slight slow small
smart smooth social soft sole solid sore sorry sound southern sovereign
spare special specific stable stark steady steep sterile stiff still
straight strange strategic strict strong stubborn subsequent subtle sudden
sufficient suitable sunny super superb superior supreme sure suspicious
sweet swift tactical tall technical temporary tender tense terrible third
thick thin thorough tight tiny tired top total tough toxic traditional
tragic transparent tremendous tribal tricky tropical true turbulent ugly
ultimate unable underground uneasy unfair unique universal unlawful
unlikely unprecedented unusual upcoming upper upset urban urgent useful
useless usual vacant vague vast verbal vertical veteran viable vibrant
vicious violent virtual visible vital vocal volatile voluntary vulnerable
warm weak wealthy weird welcome western wet white wide wild willing wise
wooden worldwide worse worst worth worthy wrong young
""".split()

NATIONALITY_ADJ = """
afghan african albanian algerian american arab argentine armenian asian
australian austrian balkan baltic belarusian belgian bolivian bosnian
brazilian british bulgarian cambodian canadian caribbean chilean chinese
colombian congolese croatian cuban cypriot czech danish dutch ecuadorian
egyptian english estonian ethiopian european filipino finnish french
georgian german ghanaian greek haitian hungarian indian indonesian iranian
iraqi irish israeli italian jamaican japanese jordanian kazakh kenyan
korean kurdish kuwaiti latin latvian lebanese libyan lithuanian macedonian
malaysian mexican moldovan mongolian moroccan nigerian nordic norwegian
pakistani palestinian peruvian polish portuguese romanian russian rwandan
saudi scottish serbian siberian slovak slovenian somali spanish sudanese
swedish swiss syrian taiwanese thai tunisian turkish ugandan ukrainian
venezuelan vietnamese welsh yemeni
""".split()

ADVERBS = """
abroad accordingly afterwards again ahead almost alone already altogether
anyway apart apparently approximately aside away back badly barely
carefully certainly clearly closely consequently considerably constantly
currently deeply definitely directly downtown early easily effectively
elsewhere entirely especially essentially eventually exactly extremely
fairly fast finally forever formerly forward frequently fully further
generally gently gradually greatly hard hardly heavily hence highly
immediately increasingly indeed initially instead largely lately later
least less likewise literally mainly maybe merely mostly much naturally
nearby nearly necessarily newly nonetheless nowadays obviously occasionally
online otherwise overall overseas particularly partly perhaps personally
possibly precisely presumably previously primarily probably promptly
properly publicly quickly quite rapidly rarely rather really recently
regardless regularly relatively reportedly roughly sharply shortly
significantly similarly simply slightly slowly smoothly somehow sometime
somewhat soon specifically steadily strongly subsequently substantially
successfully suddenly supposedly surely surprisingly together tomorrow
tonight totally truly twice typically ultimately undoubtedly unfortunately
usually virtually well whatsoever wherever widely yesterday
""".split()

# (singular, plural); plural None = regular orthography
IRREGULAR_NOUNS = [
    ("child", "children"), ("man", "men"), ("woman", "women"), ("person", "people"),
    ("foot", "feet"), ("tooth", "teeth"), ("goose", "geese"), ("mouse", "mice"),
    ("life", "lives"), ("wife", "wives"), ("knife", "knives"), ("leaf", "leaves"),
    ("wolf", "wolves"), ("half", "halves"), ("shelf", "shelves"), ("thief", "thieves"),
    ("loaf", "loaves"), ("calf", "calves"), ("self", "selves"), ("hero", "heroes"),
    ("potato", "potatoes"), ("tomato", "tomatoes"), ("echo", "echoes"), ("veto", "vetoes"),
    ("cargo", "cargoes"), ("embargo", "embargoes"), ("torpedo", "torpedoes"),
    ("volcano", "volcanoes"), ("crisis", "crises"), ("analysis", "analyses"),
    ("basis", "bases"), ("thesis", "theses"), ("hypothesis", "hypotheses"),
    ("diagnosis", "diagnoses"), ("emphasis", "emphases"), ("oasis", "oases"),
    ("axis", "axes"), ("criterion", "criteria"), ("phenomenon", "phenomena"),
    ("medium", "media"), ("datum", "data"), ("memorandum", "memoranda"),
    ("curriculum", "curricula"), ("referendum", "referendums"), ("forum", "forums"),
    ("stadium", "stadiums"), ("index", "indices"), ("appendix", "appendices"),
    ("matrix", "matrices"), ("vertex", "vertices"), ("series", "series"),
    ("species", "species"), ("aircraft", "aircraft"), ("deer", "deer"),
    ("sheep", "sheep"), ("fish", "fish"), ("police", "police"), ("staff", "staff"),
    ("militia", "militias"), ("army", "armies"), ("city", "cities"),
    ("country", "countries"), ("party", "parties"), ("policy", "policies"),
    ("body", "bodies"), ("family", "families"), ("story", "stories"),
    ("study", "studies"), ("company", "companies"), ("authority", "authorities"),
    ("community", "communities"), ("county", "counties"), ("enemy", "enemies"),
    ("economy", "economies"), ("embassy", "embassies"), ("century", "centuries"),
    ("territory", "territories"), ("treaty", "treaties"), ("casualty", "casualties"),
    ("bus", "buses"), ("gas", "gases"), ("virus", "viruses"), ("census", "censuses"),
    ("crossing", "crossings"), ("shoe", "shoes"), ("toe", "toes"),
]

NOUNS = """
access accord account act action activist activity administration advance
advantage advice age agency agenda agreement aid air airline airport alarm
alliance ally amendment amount animal anniversary announcement appeal
approval area arm arrival art article artillery assault assembly asset
attack attempt attention audience autumn average aviation back background
bag balance ballot bank barrel base battle beach bell belt bench benefit
bid bill biology bird blast block blood board boat bomb bombing book border
boss bottle bottom boundary box boy brain branch bread breach break bridge
brigade brother budget building bullet burden bureau business cabinet cable
camp campaign canal cancer candidate capital captain car card care career
cargo case cash category cattle cause ceasefire cell center ceremony chain
chair chairman challenge champion chance change channel chaos chapter
charge charity chart checkpoint chemical chest chief choice church circle
citizen city claim clash class classic click client climate clinic clock
cloud club coach coal coalition coast code collapse college colonel column
combat command commander comment commerce commission committee commodity
company comparison competition complaint compound compromise computer
concern concert conclusion condition conduct conference confidence conflict
congress connection consensus consequence constitution construction contact
content contest context contract contrast control controversy convention
convoy cooperation cop corner corporation correspondent corridor corruption
cost council counsel count counter coup couple courage course court cousin
coverage credit crew crime crisis critic criticism crop crowd crown cruise
culture cup currency curfew customer cycle dam damage danger data date
daughter dawn day deal death debate debris debt decade decision decline
decree defeat defector defense deficit degree delay delegate delegation
demand democracy demonstration department departure deployment deposit
depth deputy desert design desire desk destination destruction detail
detainee detention device dialogue diameter diesel diet difference dinner
diplomacy diplomat direction director disaster discipline discourse
discovery discussion disease dispute distance district division doctor
doctrine document dog dollar domain door dose downtown dozen draft drama
dream drill drink drive driver drone drought drug duty earth earthquake
east economist economy edge editor education effect effort election
electricity element elite email embargo emergency emission empire employee
employer employment end enemy energy engine engineer entrance entry
environment episode equipment era error escape estate ethics evacuation
evening event evidence exam example exchange excuse execution exercise
exile exit expansion expense expert explosion explosive export exposure
extension extent extremist eye face facility fact factor factory failure
faith fall fame farm farmer fashion father fault favor fear feature fee
female fence festival field fighter fighting figure film finance finding
fire firm fish flag fleet flight flood floor flow flu focus food foot
football force forecast forest form formation fortune fraud freedom
frequency friend front frontier fruit fuel function fund funeral future
game gap garden gas gate gender general generation genocide gesture girl
goal gold golf good government governor grade grain grant graph grass
ground group growth guard guerrilla guest guidance gulf gun hand harbor
hardware harm hat hate head headline headquarters health hearing heart
heat height helicopter hill history hit home homeland honor hope horizon
horror horse hospital host hostage hostility hotel hour house household
housing human humanity hunger hurricane ice idea identity ideology image
immigrant immigration impact import incident income increase independence
individual industry infantry inflation influence information
infrastructure initiative injury innovation inquiry insider inspection
inspector instance institute institution instrument insurance insurgency
insurgent intelligence intent intention interest interior internet
intervention interview invasion investigation investigator investment
investor island issue item jail jet job journal journalist judge judgment
jury justice kid kilometer king kingdom knowledge lab label labor lack
lake land landscape language laptop launch law lawmaker lawsuit lawyer
leader leadership league level liberty library license lieutenant light
limit line link lion liquid list logic look loss lot love machine magazine
magic mainland majority male mall man mandate map margin marine market
massacre material mayor meal measure mechanism medal
meeting member membership memo memory message metal meter method metro
midnight migrant migration mile milestone military militant milk mill
mind mine minister ministry minority minute missile mission mistake mix
mixture mob mode model moment momentum money monopoly month monument mood
morning mosque mother motion motive motor mountain mouth move movement
movie multitude murder muscle museum music musician name narrative nation
nature navy need negotiation neighbor neighborhood network news newspaper
night nobody noise nomination noon north note notice notion novel number
nurse object objective obligation observer occasion occupation ocean offer
office officer official oil opening operation opinion opponent opportunity
opposition option order organization origin outbreak outcome outlet output
outrage oversight owner pace package pact page pain panel panic paper
parade parent park parliament part participant partner partnership party
passage passenger passport past pastor path patient patrol pattern pause
payment peace peacekeeper peak peasant pen penalty pension people percent
performance period permission permit petition phase phenomenon philosophy
phone photo photograph phrase picture piece pilot pipeline place plan
plane planet plant plastic plate platform player plaza plot poem poet
point police politician politics poll pollution pool population port
portion position possibility post potential poverty power practice
precedent presence president press pressure price pride priest prince
principle priority prison prisoner privacy privilege prize probe problem
procedure process producer product production profession professor profile
profit program progress project promise proof propaganda property proposal
prosecutor prospect protection protest protester province provision
public purpose quality quarter queen question radar radio raid rail
railway rain raise rally range rank ransom rate ratio reaction reader
reality reason rebel rebellion recession recognition record recovery
referendum reform refugee region regime register regulation regulator
relation relationship release relief religion report reporter republic
reputation request requirement rescue research researcher reserve
residence resident resignation resistance resolution resort resource
respect response responsibility rest restaurant result retreat return
revenge revenue review revolution reward rhetoric rice ride rifle right
ring riot rise risk rival river road rock rocket role roof room root
rotation round route routine rule ruling rumor run sabotage safety sale
sample sanction sand satellite scale scandal scenario scene schedule
scheme scholar school science scientist score sea search season seat
second secret secretary section sector security seizure selection senate
senator sense sentence sergeant series service session settlement shape
share shell shelter ship shipment shock shooting shop shore shortage shot
shoulder show side siege sight sign signal signature silence singer sister
site situation size skill sky slogan smoke snow society software soil
soldier solution son song sort source south space speaker speech speed
spending sphere spirit spokesman spokesperson spokeswoman sport spot
spring square stability stadium stage stake standard standoff star start
state statement station statistic status steel step stock stone store
storm story strategy stream street strength stress strike structure
struggle student style subject submarine subsidy suburb subway success
summer summit sun supply support supporter surface surge surplus surprise
surveillance survey survivor suspect suspension symbol sympathy symptom
system table tactic tail talk tank target tariff task tax taxi tea teacher
team technology teen telephone television temperature temple tension tent
term terminal territory terror terrorism terrorist test testimony text
theater theme theory therapy thing thought threat throne ticket tide time
tip tissue title today ton tone tool top topic tornado total tour tourism
tourist tower town trace track trade tradition traffic tragedy trail train
training transaction transcript transit transition transport
transportation trauma travel treasury treatment trend trial tribe tribunal
trip troop trouble truce truck trust truth tunnel turn turnout type
uncertainty uniform union unit unity university uprising uranium usage use
user vaccine value van variety vehicle vendor version vessel veteran
victim victory video view village violation violence visa vision visit
visitor voice volume volunteer vote voter wage wale walk wall war warfare
warhead warning warrant waste watch water wave way weakness wealth weapon
weather web website week weekend weight welfare west wheat wheel widow
width wind window winner winter wire wisdom witness woman word work worker
workforce workshop world worship wound wreck writer year youth zone
""".split()

VOWELS = set("aeiou")


def verb_forms(base):
    # 3sg, past, gerund with standard doubling/e/y rules
    if base.endswith(("s", "x", "z", "ch", "sh", "o")):
        s3 = base + "es"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        s3 = base[:-1] + "ies"
    else:
        s3 = base + "s"
    if base.endswith("e"):
        past, ger = base + "d", base[:-1] + "ing"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        past, ger = base[:-1] + "ied", base + "ing"
    elif double_final(base):
        past, ger = base + base[-1] + "ed", base + base[-1] + "ing"
    else:
        past, ger = base + "ed", base + "ing"
    return s3, past, ger


DOUBLE_OK = set("bdgklmnprtv")
NO_DOUBLE = {
    "visit", "offer", "open", "happen", "listen", "enter", "suffer", "order",
    "cover", "answer", "consider", "deliver", "develop", "discover", "gather",
    "matter", "monitor", "murder", "number", "recover", "register", "remember",
    "render", "wonder", "bother", "color", "favor", "honor", "labor", "level",
    "market", "model", "panel", "pocket", "profit", "target", "total", "travel",
    "trigger", "limit", "edit", "exit", "audit", "benefit", "credit", "exhibit",
    "inhabit", "inherit", "orbit", "pilot", "pivot", "summon", "abandon",
    "threaten", "weaken", "widen", "broaden", "tighten", "soften", "harden",
    "hasten", "lengthen", "strengthen", "sharpen", "loosen", "lessen", "worsen",
    "reckon", "beckon", "season", "reason", "poison", "prison", "question",
    "mention", "champion", "function", "sanction", "pardon", "burden", "sicken",
    "quicken", "thicken", "flatten", "blossom", "welcom", "welcome", "iron",
    "cancel", "counsel", "fuel", "label", "equal", "rival", "signal", "scan",
}


def double_final(base):
    if base in NO_DOUBLE:
        return False
    if len(base) < 3:
        return len(base) == 2 and base[-1] in DOUBLE_OK and base[-2] in VOWELS
    # CVC ending, final consonant doubles for (mostly) monosyllables
    if base[-1] in DOUBLE_OK and base[-2] in VOWELS and base[-3] not in VOWELS:
        return len(base) <= 4 or base.endswith(("mit", "fer", "trol", "gret", "cur", "el"))
    return False


def noun_plural(base):
    if base.endswith(("s", "x", "z", "ch", "sh")):
        return base + "es"
    if base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        return base[:-1] + "ies"
    return base + "s"


def build():
    stop = sorted(set(STOPWORDS))
    tagger = {}
    lemma = {}

    def put_tag(word, tag):
        if word not in tagger:
            tagger[word] = tag

    def put_lemma(form, base):
        if form != base and form not in lemma:
            lemma[form] = base

    for w in stop:
        if w.isalpha():
            put_tag(w, "OTHER")

    for base in sorted(set(NOUNS)):
        put_tag(base, "NOUN")
        pl = noun_plural(base)
        put_tag(pl, "NOUN")
        put_lemma(pl, base)
    for sg, pl in IRREGULAR_NOUNS:
        put_tag(sg, "NOUN")
        tagger[pl] = "NOUN"
        if pl != sg:
            lemma[pl] = sg

    for adj in sorted(set(ADJECTIVES) | set(NATIONALITY_ADJ)):
        put_tag(adj, "ADJ")

    for base in sorted(set(REGULAR_VERBS)):
        s3, past, ger = verb_forms(base)
        for f in (base, s3, past, ger):
            put_tag(f, "VERB")
        for f in (s3, past, ger):
            put_lemma(f, base)
    for row in IRREGULAR_VERBS:
        base = row[0]
        s3, _, ger = verb_forms(base)
        forms = [base, row[1], row[2], row[3] or s3, row[4] or ger]
        for f in forms:
            put_tag(f, "VERB")
            put_lemma(f, base)

    for adv in sorted(set(ADVERBS)):
        put_tag(adv, "ADV")
    for adj in sorted(set(ADJECTIVES)):
        if adj.endswith(("ly", "y")) or len(adj) <= 3:
            continue
        ly = adj[:-2] + "ly" if adj.endswith("le") else adj + "ly"
        put_tag(ly, "ADV")
        put_lemma(ly, ly)  # adverbs lemmatize to themselves

    # forms whose rule-stripped shape would be wrong
    for form, base in [
        ("news", "news"), ("series", "series"), ("species", "species"),
        ("politics", "politics"), ("economics", "economics"), ("physics", "physics"),
        ("mathematics", "mathematics"), ("ethics", "ethics"), ("crisis", "crisis"),
        ("analysis", "analysis"), ("basis", "basis"), ("bias", "bias"),
        ("atlas", "atlas"), ("canvas", "canvas"), ("chaos", "chaos"),
        ("lens", "lens"), ("iris", "iris"), ("tennis", "tennis"),
        ("corps", "corps"), ("headquarters", "headquarters"), ("means", "means"),
        ("proceedings", "proceedings"), ("earnings", "earnings"),
    ]:
        lemma[form] = base

    tag_lines = [f"{w}\t{t}" for w, t in sorted(tagger.items())]
    lemma_lines = [f"{f}\t{b}" for f, b in sorted(lemma.items())]

    out = os.path.join(os.path.dirname(__file__), "..", "src", "lexicon_data.cpp")
    with open(out, "w") as fh:
        fh.write("// Generated by tools/gen_lexicon.py -- do not edit by hand.\n")
        fh.write('#include "ntopo/lexicon_data.hpp"\n\n')
        fh.write("namespace ntopo::data {\n\n")
        fh.write('const char* kStopwords = R"NTDATA(\n')
        fh.write("\n".join(stop))
        fh.write('\n)NTDATA";\n\n')
        fh.write('const char* kTaggerLexicon = R"NTDATA(\n')
        fh.write("\n".join(tag_lines))
        fh.write('\n)NTDATA";\n\n')
        fh.write('const char* kLemmaLexicon = R"NTDATA(\n')
        fh.write("\n".join(lemma_lines))
        fh.write('\n)NTDATA";\n\n')
        fh.write("}  // namespace ntopo::data\n")
    print(f"stopwords: {len(stop)}  tagger entries: {len(tag_lines)}  lemma entries: {len(lemma_lines)}")


if __name__ == "__main__":
    build()
