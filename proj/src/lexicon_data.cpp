// Generated by tools/gen_lexicon.py -- do not edit by hand.
#include "ntopo/lexicon_data.hpp"

namespace ntopo::data {

const char* kStopwords = R"NTDATA(
a
about
above
across
after
again
against
all
along
also
although
always
am
amid
among
an
and
any
are
aren
aren't
around
as
at
be
because
been
before
being
below
besides
between
both
but
by
can
can't
cannot
could
couldn
couldn't
despite
did
didn
didn't
do
does
doesn
doesn't
doing
don
don't
down
during
each
even
ever
few
for
from
further
had
hadn't
has
hasn
hasn't
have
haven
haven't
having
he
he'd
he'll
he's
her
here
here's
hers
herself
him
himself
his
how
how's
however
i
i'd
i'll
i'm
i've
if
in
into
is
isn
isn't
it
it's
its
itself
just
let's
may
me
meanwhile
might
more
moreover
most
must
mustn
mustn't
my
myself
never
nevertheless
no
nor
not
now
of
off
often
on
once
only
onto
or
other
ought
our
ours
ourselves
out
over
own
per
same
shall
shan't
she
she'd
she'll
she's
should
shouldn
shouldn't
since
so
some
sometimes
still
such
than
that
that's
the
their
theirs
them
themselves
then
there
there's
therefore
these
they
they'd
they'll
they're
they've
this
those
though
through
thus
to
too
toward
towards
under
unless
until
up
upon
very
via
was
wasn
wasn't
we
we'd
we'll
we're
we've
were
weren
weren't
what
what's
when
when's
where
where's
whether
which
while
who
who's
whom
why
why's
will
with
within
without
wo
won't
would
wouldn
wouldn't
yet
you
you'd
you'll
you're
you've
your
yours
yourself
yourselves
)NTDATA";

const char* kTaggerLexicon = R"NTDATA(
a	OTHER
able	ADJ
ably	ADV
about	OTHER
above	OTHER
abroad	ADV
abrupt	ADJ
abruptly	ADV
absent	ADJ
absently	ADV
abstract	ADJ
abstractly	ADV
absurd	ADJ
absurdly	ADV
accept	VERB
accepted	VERB
accepting	VERB
accepts	VERB
access	NOUN
accessed	VERB
accesses	NOUN
accessing	VERB
accompanied	VERB
accompanies	VERB
accompany	VERB
accompanying	VERB
accord	NOUN
accordingly	ADV
accords	NOUN
account	NOUN
accounts	NOUN
accuse	VERB
accused	VERB
accuses	VERB
accusing	VERB
achieve	VERB
achieved	VERB
achieves	VERB
achieving	VERB
acknowledge	VERB
acknowledged	VERB
acknowledges	VERB
acknowledging	VERB
acquire	VERB
acquired	VERB
acquires	VERB
acquiring	VERB
across	OTHER
act	NOUN
acted	VERB
acting	VERB
action	NOUN
actions	NOUN
activist	NOUN
activists	NOUN
activities	NOUN
activity	NOUN
acts	NOUN
acute	ADJ
acutely	ADV
add	VERB
added	VERB
adding	VERB
address	VERB
addressed	VERB
addresses	VERB
addressing	VERB
adds	VERB
adequate	ADJ
adequately	ADV
adjust	VERB
adjusted	VERB
adjusting	VERB
adjusts	VERB
administration	NOUN
administrations	NOUN
admit	VERB
admits	VERB
admitted	VERB
admitting	VERB
adopt	VERB
adopted	VERB
adopting	VERB
adopts	VERB
advance	NOUN
advanced	VERB
advances	NOUN
advancing	VERB
advantage	NOUN
advantages	NOUN
advice	NOUN
advices	NOUN
advise	VERB
advised	VERB
advises	VERB
advising	VERB
affect	VERB
affected	VERB
affecting	VERB
affects	VERB
afford	VERB
afforded	VERB
affording	VERB
affords	VERB
afghan	ADJ
afraid	ADJ
afraidly	ADV
african	ADJ
after	OTHER
afterwards	ADV
again	OTHER
against	OTHER
age	NOUN
agencies	NOUN
agency	NOUN
agenda	NOUN
agendas	NOUN
ages	NOUN
aggressive	ADJ
aggressively	ADV
agree	VERB
agreed	VERB
agreement	NOUN
agreements	NOUN
agrees	VERB
agreing	VERB
ahead	ADV
aid	NOUN
aids	NOUN
aim	VERB
aimed	VERB
aiming	VERB
aims	VERB
air	NOUN
aircraft	NOUN
airline	NOUN
airlines	NOUN
airport	NOUN
airports	NOUN
airs	NOUN
alarm	NOUN
alarms	NOUN
albanian	ADJ
algerian	ADJ
alive	ADJ
alively	ADV
all	OTHER
allege	VERB
alleged	ADJ
allegedly	ADV
alleges	VERB
alleging	VERB
alliance	NOUN
alliances	NOUN
allies	NOUN
allow	VERB
allowed	VERB
allowing	VERB
allows	VERB
ally	NOUN
almost	ADV
alone	ADJ
alonely	ADV
along	OTHER
already	ADV
also	OTHER
although	OTHER
altogether	ADV
always	OTHER
am	OTHER
ambitious	ADJ
ambitiously	ADV
amendment	NOUN
amendments	NOUN
american	ADJ
amid	OTHER
among	OTHER
amount	NOUN
amounts	NOUN
an	OTHER
analyses	NOUN
analysis	NOUN
ancient	ADJ
anciently	ADV
and	OTHER
angry	ADJ
animal	NOUN
animals	NOUN
anniversaries	NOUN
anniversary	NOUN
announce	VERB
announced	VERB
announcement	NOUN
announcements	NOUN
announces	VERB
announcing	VERB
annual	ADJ
annually	ADV
anonymous	ADJ
anonymously	ADV
answer	VERB
answered	VERB
answering	VERB
answers	VERB
anticipate	VERB
anticipated	VERB
anticipates	VERB
anticipating	VERB
any	OTHER
anyway	ADV
apart	ADV
apologize	VERB
apologized	VERB
apologizes	VERB
apologizing	VERB
apparent	ADJ
apparently	ADV
appeal	NOUN
appealed	VERB
appealing	VERB
appeals	NOUN
appear	VERB
appeared	VERB
appearing	VERB
appears	VERB
appendices	NOUN
appendix	NOUN
applied	VERB
applies	VERB
apply	VERB
applying	VERB
appoint	VERB
appointed	VERB
appointing	VERB
appoints	VERB
approach	VERB
approached	VERB
approaches	VERB
approaching	VERB
appropriate	ADJ
appropriately	ADV
approval	NOUN
approvals	NOUN
approve	VERB
approved	VERB
approves	VERB
approving	VERB
approximately	ADV
arab	ADJ
are	OTHER
area	NOUN
areas	NOUN
aren	OTHER
argentine	ADJ
argue	VERB
argued	VERB
argues	VERB
arguing	VERB
arise	VERB
arisen	VERB
arises	VERB
arising	VERB
arm	NOUN
armed	ADJ
armedly	ADV
armenian	ADJ
armies	NOUN
arms	NOUN
army	NOUN
arose	VERB
around	OTHER
arrest	VERB
arrested	VERB
arresting	VERB
arrests	VERB
arrival	NOUN
arrivals	NOUN
arrive	VERB
arrived	VERB
arrives	VERB
arriving	VERB
art	NOUN
article	NOUN
articles	NOUN
artificial	ADJ
artificially	ADV
artilleries	NOUN
artillery	NOUN
arts	NOUN
as	OTHER
asian	ADJ
aside	ADV
ask	VERB
asked	VERB
asking	VERB
asks	VERB
asleep	ADJ
asleeply	ADV
assault	NOUN
assaulted	VERB
assaulting	VERB
assaults	NOUN
assemblies	NOUN
assembly	NOUN
assert	VERB
asserted	VERB
asserting	VERB
asserts	VERB
assess	VERB
assessed	VERB
assesses	VERB
assessing	VERB
asset	NOUN
assets	NOUN
assign	VERB
assigned	VERB
assigning	VERB
assigns	VERB
assist	VERB
assisted	VERB
assisting	VERB
assists	VERB
assume	VERB
assumed	VERB
assumes	VERB
assuming	VERB
assure	VERB
assured	VERB
assures	VERB
assuring	VERB
at	OTHER
ate	VERB
attach	VERB
attached	VERB
attaches	VERB
attaching	VERB
attack	NOUN
attacked	VERB
attacking	VERB
attacks	NOUN
attempt	NOUN
attempted	VERB
attempting	VERB
attempts	NOUN
attend	VERB
attended	VERB
attending	VERB
attends	VERB
attention	NOUN
attentions	NOUN
attract	VERB
attracted	VERB
attracting	VERB
attracts	VERB
audience	NOUN
audiences	NOUN
australian	ADJ
austrian	ADJ
authorities	NOUN
authority	NOUN
authorize	VERB
authorized	VERB
authorizes	VERB
authorizing	VERB
automatic	ADJ
automaticly	ADV
autumn	NOUN
autumns	NOUN
available	ADJ
availably	ADV
average	NOUN
averagely	ADV
averages	NOUN
aviation	NOUN
aviations	NOUN
avoid	VERB
avoided	VERB
avoiding	VERB
avoids	VERB
away	ADV
awful	ADJ
awfully	ADV
awkward	ADJ
awkwardly	ADV
axes	NOUN
axis	NOUN
back	NOUN
backed	VERB
background	NOUN
backgrounds	NOUN
backing	VERB
backs	NOUN
bad	ADJ
badly	ADV
bag	NOUN
bags	NOUN
balance	NOUN
balances	NOUN
balkan	ADJ
ballot	NOUN
ballots	NOUN
baltic	ADJ
ban	VERB
bank	NOUN
banks	NOUN
banned	VERB
banning	VERB
bans	VERB
bare	ADJ
barely	ADV
barrel	NOUN
barrels	NOUN
base	NOUN
based	VERB
bases	NOUN
basic	ADJ
basicly	ADV
basing	VERB
basis	NOUN
battle	NOUN
battled	VERB
battles	NOUN
battling	VERB
be	OTHER
beach	NOUN
beaches	NOUN
bear	VERB
bearing	VERB
bears	VERB
beat	VERB
beaten	VERB
beating	VERB
beats	VERB
beautiful	ADJ
beautifully	ADV
became	VERB
because	OTHER
become	VERB
becomes	VERB
becoming	VERB
been	OTHER
before	OTHER
began	VERB
begin	VERB
beginning	VERB
begins	VERB
begun	VERB
behave	VERB
behaved	VERB
behaves	VERB
behaving	VERB
being	OTHER
belarusian	ADJ
belgian	ADJ
believe	VERB
believed	VERB
believes	VERB
believing	VERB
bell	NOUN
bells	NOUN
belong	VERB
belonged	VERB
belonging	VERB
belongs	VERB
below	OTHER
belt	NOUN
belts	NOUN
bench	NOUN
benches	NOUN
bend	VERB
bending	VERB
bends	VERB
benefit	NOUN
benefited	VERB
benefiting	VERB
benefits	NOUN
bent	VERB
besides	OTHER
between	OTHER
bid	NOUN
bidded	VERB
bidding	VERB
bids	NOUN
big	ADJ
bill	NOUN
bills	NOUN
bind	VERB
binding	VERB
binds	VERB
biologies	NOUN
biology	NOUN
bird	NOUN
birds	NOUN
bit	VERB
bite	VERB
bites	VERB
biting	VERB
bitten	VERB
bitter	ADJ
bitterly	ADV
bizarre	ADJ
bizarrely	ADV
black	ADJ
blackly	ADV
blame	VERB
blamed	VERB
blames	VERB
blaming	VERB
bland	ADJ
blandly	ADV
blast	NOUN
blasts	NOUN
blew	VERB
blind	ADJ
blindly	ADV
block	NOUN
blocked	VERB
blocking	VERB
blocks	NOUN
blood	NOUN
bloods	NOUN
blow	VERB
blowing	VERB
blown	VERB
blows	VERB
blue	ADJ
bluely	ADV
board	NOUN
boarded	VERB
boarding	VERB
boards	NOUN
boat	NOUN
boats	NOUN
bodies	NOUN
body	NOUN
bold	ADJ
boldly	ADV
bolivian	ADJ
bomb	NOUN
bombing	NOUN
bombings	NOUN
bombs	NOUN
book	NOUN
books	NOUN
boost	VERB
boosted	VERB
boosting	VERB
boosts	VERB
border	NOUN
borders	NOUN
bore	VERB
borne	VERB
borrow	VERB
borrowed	VERB
borrowing	VERB
borrows	VERB
bosnian	ADJ
boss	NOUN
bosses	NOUN
both	OTHER
bother	VERB
bothered	VERB
bothering	VERB
bothers	VERB
bottle	NOUN
bottles	NOUN
bottom	NOUN
bottoms	NOUN
bought	VERB
bound	VERB
boundaries	NOUN
boundary	NOUN
box	NOUN
boxes	NOUN
boy	NOUN
boys	NOUN
brain	NOUN
brains	NOUN
branch	NOUN
branches	NOUN
brave	ADJ
bravely	ADV
brazilian	ADJ
breach	NOUN
breaches	NOUN
bread	NOUN
breads	NOUN
break	NOUN
breaking	VERB
breaks	NOUN
bridge	NOUN
bridges	NOUN
brief	ADJ
briefed	VERB
briefing	VERB
briefly	ADV
briefs	VERB
brigade	NOUN
brigades	NOUN
bright	ADJ
brightly	ADV
brilliant	ADJ
brilliantly	ADV
bring	VERB
bringing	VERB
brings	VERB
british	ADJ
broad	ADJ
broadcast	VERB
broadcasted	VERB
broadcasting	VERB
broadcasts	VERB
broadly	ADV
broke	VERB
broken	VERB
brother	NOUN
brothers	NOUN
brought	VERB
brown	ADJ
brownly	ADV
brutal	ADJ
brutally	ADV
budget	NOUN
budgets	NOUN
build	VERB
building	NOUN
buildings	NOUN
builds	VERB
built	VERB
bulgarian	ADJ
bullet	NOUN
bullets	NOUN
burden	NOUN
burdens	NOUN
bureau	NOUN
bureaus	NOUN
burn	VERB
burned	VERB
burning	VERB
burns	VERB
burst	VERB
bursting	VERB
bursts	VERB
bus	NOUN
buses	NOUN
business	NOUN
businesses	NOUN
busy	ADJ
but	OTHER
buy	VERB
buying	VERB
buys	VERB
by	OTHER
cabinet	NOUN
cabinets	NOUN
cable	NOUN
cables	NOUN
calf	NOUN
call	VERB
called	VERB
calling	VERB
calls	VERB
calm	ADJ
calmed	VERB
calming	VERB
calmly	ADV
calms	VERB
calves	NOUN
cambodian	ADJ
came	VERB
camp	NOUN
campaign	NOUN
campaigned	VERB
campaigning	VERB
campaigns	NOUN
camps	NOUN
can	OTHER
canadian	ADJ
canal	NOUN
canals	NOUN
cancel	VERB
canceled	VERB
canceling	VERB
cancels	VERB
cancer	NOUN
cancers	NOUN
candidate	NOUN
candidates	NOUN
cannot	OTHER
capable	ADJ
capably	ADV
capital	NOUN
capitals	NOUN
captain	NOUN
captains	NOUN
capture	VERB
captured	VERB
captures	VERB
capturing	VERB
car	NOUN
card	NOUN
cards	NOUN
care	NOUN
cared	VERB
career	NOUN
careers	NOUN
careful	ADJ
carefully	ADV
cares	NOUN
cargo	NOUN
cargoes	NOUN
cargos	NOUN
caribbean	ADJ
caring	VERB
carried	VERB
carries	VERB
carry	VERB
carrying	VERB
cars	NOUN
case	NOUN
cases	NOUN
cash	NOUN
cashes	NOUN
cast	VERB
casting	VERB
casts	VERB
casualties	NOUN
casualty	NOUN
catch	VERB
catches	VERB
catching	VERB
categories	NOUN
category	NOUN
cattle	NOUN
cattles	NOUN
caught	VERB
cause	NOUN
caused	VERB
causes	NOUN
causing	VERB
cautious	ADJ
cautiously	ADV
cease	VERB
ceased	VERB
ceasefire	NOUN
ceasefires	NOUN
ceases	VERB
ceasing	VERB
celebrate	VERB
celebrated	VERB
celebrates	VERB
celebrating	VERB
cell	NOUN
cells	NOUN
census	NOUN
censuses	NOUN
center	NOUN
centers	NOUN
centuries	NOUN
century	NOUN
ceremonies	NOUN
ceremony	NOUN
certainly	ADV
chain	NOUN
chains	NOUN
chair	NOUN
chairman	NOUN
chairmans	NOUN
chairs	NOUN
challenge	NOUN
challenged	VERB
challenges	NOUN
challenging	VERB
champion	NOUN
champions	NOUN
chance	NOUN
chances	NOUN
change	NOUN
changed	VERB
changes	NOUN
changing	VERB
channel	NOUN
channels	NOUN
chaos	NOUN
chaoses	NOUN
chapter	NOUN
chapters	NOUN
charge	NOUN
charged	VERB
charges	NOUN
charging	VERB
charities	NOUN
charity	NOUN
chart	NOUN
charts	NOUN
chase	VERB
chased	VERB
chases	VERB
chasing	VERB
cheap	ADJ
cheaply	ADV
check	VERB
checked	VERB
checking	VERB
checkpoint	NOUN
checkpoints	NOUN
checks	VERB
cheer	VERB
cheered	VERB
cheering	VERB
cheers	VERB
chemical	NOUN
chemicals	NOUN
chest	NOUN
chests	NOUN
chief	NOUN
chiefly	ADV
chiefs	NOUN
child	NOUN
children	NOUN
chilean	ADJ
chinese	ADJ
choice	NOUN
choices	NOUN
choose	VERB
chooses	VERB
choosing	VERB
chose	VERB
chosen	VERB
chronic	ADJ
chronicly	ADV
church	NOUN
churches	NOUN
circle	NOUN
circles	NOUN
cite	VERB
cited	VERB
cites	VERB
cities	NOUN
citing	VERB
citizen	NOUN
citizens	NOUN
city	NOUN
civic	ADJ
civicly	ADV
civil	ADJ
civilly	ADV
claim	NOUN
claimed	VERB
claiming	VERB
claims	NOUN
clarified	VERB
clarifies	VERB
clarify	VERB
clarifying	VERB
clash	NOUN
clashed	VERB
clashes	NOUN
clashing	VERB
class	NOUN
classes	NOUN
classic	NOUN
classicly	ADV
classics	NOUN
clean	ADJ
cleaned	VERB
cleaning	VERB
cleanly	ADV
cleans	VERB
clear	ADJ
cleared	VERB
clearing	VERB
clearly	ADV
clears	VERB
clever	ADJ
cleverly	ADV
click	NOUN
clicks	NOUN
client	NOUN
clients	NOUN
climate	NOUN
climates	NOUN
climb	VERB
climbed	VERB
climbing	VERB
climbs	VERB
cling	VERB
clinging	VERB
clings	VERB
clinic	NOUN
clinics	NOUN
clock	NOUN
clocks	NOUN
close	ADJ
closed	VERB
closely	ADV
closes	VERB
closing	VERB
cloud	NOUN
clouds	NOUN
club	NOUN
clubs	NOUN
clung	VERB
coach	NOUN
coaches	NOUN
coal	NOUN
coalition	NOUN
coalitions	NOUN
coals	NOUN
coast	NOUN
coasts	NOUN
code	NOUN
codes	NOUN
cold	ADJ
coldly	ADV
collapse	NOUN
collapsed	VERB
collapses	NOUN
collapsing	VERB
collect	VERB
collected	VERB
collecting	VERB
collective	ADJ
collectively	ADV
collects	VERB
college	NOUN
colleges	NOUN
colombian	ADJ
colonel	NOUN
colonels	NOUN
colonial	ADJ
colonially	ADV
column	NOUN
columns	NOUN
combat	NOUN
combats	NOUN
combine	VERB
combined	VERB
combines	VERB
combining	VERB
come	VERB
comes	VERB
coming	VERB
command	NOUN
commander	NOUN
commanders	NOUN
commands	NOUN
comment	NOUN
commented	VERB
commenting	VERB
comments	NOUN
commerce	NOUN
commerces	NOUN
commission	NOUN
commissions	NOUN
commit	VERB
commits	VERB
committed	VERB
committee	NOUN
committees	NOUN
committing	VERB
commodities	NOUN
commodity	NOUN
common	ADJ
commonly	ADV
communicate	VERB
communicated	VERB
communicates	VERB
communicating	VERB
communities	NOUN
community	NOUN
companies	NOUN
company	NOUN
compare	VERB
compared	VERB
compares	VERB
comparing	VERB
comparison	NOUN
comparisons	NOUN
compete	VERB
competed	VERB
competes	VERB
competing	VERB
competition	NOUN
competitions	NOUN
competitive	ADJ
competitively	ADV
complain	VERB
complained	VERB
complaining	VERB
complains	VERB
complaint	NOUN
complaints	NOUN
complete	VERB
completed	VERB
completes	VERB
completing	VERB
complex	ADJ
complexly	ADV
complied	VERB
complies	VERB
comply	VERB
complying	VERB
compound	NOUN
compounds	NOUN
comprehensive	ADJ
comprehensively	ADV
compromise	NOUN
compromises	NOUN
computer	NOUN
computers	NOUN
concede	VERB
conceded	VERB
concedes	VERB
conceding	VERB
concern	NOUN
concerned	VERB
concerning	VERB
concerns	NOUN
concert	NOUN
concerts	NOUN
conclude	VERB
concluded	VERB
concludes	VERB
concluding	VERB
conclusion	NOUN
conclusions	NOUN
condemn	VERB
condemned	VERB
condemning	VERB
condemns	VERB
condition	NOUN
conditions	NOUN
conduct	NOUN
conducted	VERB
conducting	VERB
conducts	NOUN
conference	NOUN
conferences	NOUN
confidence	NOUN
confidences	NOUN
confident	ADJ
confidently	ADV
confirm	VERB
confirmed	VERB
confirming	VERB
confirms	VERB
conflict	NOUN
conflicts	NOUN
confront	VERB
confronted	VERB
confronting	VERB
confronts	VERB
congolese	ADJ
congress	NOUN
congresses	NOUN
connect	VERB
connected	VERB
connecting	VERB
connection	NOUN
connections	NOUN
connects	VERB
consensus	NOUN
consensuses	NOUN
consequence	NOUN
consequences	NOUN
consequently	ADV
conservative	ADJ
conservatively	ADV
consider	VERB
considerable	ADJ
considerably	ADV
considered	VERB
considering	VERB
considers	VERB
consist	VERB
consisted	VERB
consistent	ADJ
consistently	ADV
consisting	VERB
consists	VERB
consolidate	VERB
consolidated	VERB
consolidates	VERB
consolidating	VERB
constant	ADJ
constantly	ADV
constitute	VERB
constituted	VERB
constitutes	VERB
constituting	VERB
constitution	NOUN
constitutions	NOUN
construct	VERB
constructed	VERB
constructing	VERB
construction	NOUN
constructions	NOUN
constructs	VERB
consult	VERB
consulted	VERB
consulting	VERB
consults	VERB
contact	NOUN
contacts	NOUN
contain	VERB
contained	VERB
containing	VERB
contains	VERB
contemporary	ADJ
contend	VERB
contended	VERB
contending	VERB
contends	VERB
content	NOUN
contents	NOUN
contest	NOUN
contests	NOUN
context	NOUN
contexts	NOUN
continue	VERB
continued	VERB
continues	VERB
continuing	VERB
contract	NOUN
contracted	VERB
contracting	VERB
contracts	NOUN
contrast	NOUN
contrasts	NOUN
contribute	VERB
contributed	VERB
contributes	VERB
contributing	VERB
control	NOUN
controlled	VERB
controlling	VERB
controls	NOUN
controversial	ADJ
controversially	ADV
controversies	NOUN
controversy	NOUN
convene	VERB
convened	VERB
convenes	VERB
convenient	ADJ
conveniently	ADV
convening	VERB
convention	NOUN
conventional	ADJ
conventionally	ADV
conventions	NOUN
convict	VERB
convicted	VERB
convicting	VERB
convicts	VERB
convince	VERB
convinced	VERB
convinces	VERB
convincing	VERB
convoy	NOUN
convoys	NOUN
cooperate	VERB
cooperated	VERB
cooperates	VERB
cooperating	VERB
cooperation	NOUN
cooperations	NOUN
coordinate	VERB
coordinated	VERB
coordinates	VERB
coordinating	VERB
cop	NOUN
cope	VERB
coped	VERB
copes	VERB
copied	VERB
copies	VERB
coping	VERB
cops	NOUN
copy	VERB
copying	VERB
corner	NOUN
corners	NOUN
corporation	NOUN
corporations	NOUN
correct	ADJ
corrected	VERB
correcting	VERB
correctly	ADV
corrects	VERB
correspondent	NOUN
correspondents	NOUN
corridor	NOUN
corridors	NOUN
corrupt	ADJ
corruption	NOUN
corruptions	NOUN
corruptly	ADV
cost	NOUN
costed	VERB
costing	VERB
costs	NOUN
could	OTHER
couldn	OTHER
council	NOUN
councils	NOUN
counsel	NOUN
counsels	NOUN
count	NOUN
counted	VERB
counter	NOUN
countered	VERB
countering	VERB
counters	NOUN
counties	NOUN
counting	VERB
countries	NOUN
country	NOUN
counts	NOUN
county	NOUN
coup	NOUN
couple	NOUN
couples	NOUN
coups	NOUN
courage	NOUN
courages	NOUN
course	NOUN
courses	NOUN
court	NOUN
courts	NOUN
cousin	NOUN
cousins	NOUN
cover	VERB
coverage	NOUN
coverages	NOUN
covered	VERB
covering	VERB
covers	VERB
covert	ADJ
covertly	ADV
crack	VERB
cracked	VERB
cracking	VERB
cracks	VERB
crash	VERB
crashed	VERB
crashes	VERB
crashing	VERB
crazy	ADJ
create	VERB
created	VERB
creates	VERB
creating	VERB
credit	NOUN
credits	NOUN
creep	VERB
creeping	VERB
creeps	VERB
crept	VERB
crew	NOUN
crews	NOUN
cried	VERB
cries	VERB
crime	NOUN
crimes	NOUN
criminal	ADJ
criminally	ADV
crises	NOUN
crisis	NOUN
crisises	NOUN
criteria	NOUN
criterion	NOUN
critic	NOUN
criticism	NOUN
criticisms	NOUN
criticize	VERB
criticized	VERB
criticizes	VERB
criticizing	VERB
critics	NOUN
croatian	ADJ
crop	NOUN
crops	NOUN
cross	VERB
crossed	VERB
crosses	VERB
crossing	NOUN
crossings	NOUN
crowd	NOUN
crowds	NOUN
crown	NOUN
crowns	NOUN
crucial	ADJ
crucially	ADV
crude	ADJ
crudely	ADV
cruel	ADJ
cruelly	ADV
cruise	NOUN
cruises	NOUN
crush	VERB
crushed	VERB
crushes	VERB
crushing	VERB
cry	VERB
crying	VERB
cuban	ADJ
culture	NOUN
cultures	NOUN
cup	NOUN
cups	NOUN
curfew	NOUN
curfews	NOUN
curious	ADJ
curiously	ADV
currencies	NOUN
currency	NOUN
current	ADJ
currently	ADV
curricula	NOUN
curriculum	NOUN
customer	NOUN
customers	NOUN
cut	VERB
cuts	VERB
cutting	VERB
cyber	ADJ
cyberly	ADV
cycle	NOUN
cycles	NOUN
cypriot	ADJ
czech	ADJ
daily	ADJ
dam	NOUN
damage	NOUN
damaged	VERB
damages	NOUN
damaging	VERB
dams	NOUN
dance	VERB
danced	VERB
dances	VERB
dancing	VERB
danger	NOUN
dangerous	ADJ
dangerously	ADV
dangers	NOUN
danish	ADJ
dare	VERB
dared	VERB
dares	VERB
daring	VERB
dark	ADJ
darkly	ADV
data	NOUN
datas	NOUN
date	NOUN
dates	NOUN
datum	NOUN
daughter	NOUN
daughters	NOUN
dawn	NOUN
dawns	NOUN
day	NOUN
days	NOUN
dead	ADJ
deadly	ADJ
deaf	ADJ
deafly	ADV
deal	NOUN
dealing	VERB
deals	NOUN
dealt	VERB
dear	ADJ
dearly	ADV
death	NOUN
deaths	NOUN
debate	NOUN
debated	VERB
debates	NOUN
debating	VERB
debris	NOUN
debrises	NOUN
debt	NOUN
debts	NOUN
decade	NOUN
decades	NOUN
decent	ADJ
decently	ADV
decide	VERB
decided	VERB
decides	VERB
deciding	VERB
decision	NOUN
decisions	NOUN
declare	VERB
declared	VERB
declares	VERB
declaring	VERB
decline	NOUN
declined	VERB
declines	NOUN
declining	VERB
decrease	VERB
decreased	VERB
decreases	VERB
decreasing	VERB
decree	NOUN
decrees	NOUN
deep	ADJ
deeply	ADV
deer	NOUN
defeat	NOUN
defeated	VERB
defeating	VERB
defeats	NOUN
defector	NOUN
defectors	NOUN
defend	VERB
defended	VERB
defending	VERB
defends	VERB
defense	NOUN
defenses	NOUN
deficit	NOUN
deficits	NOUN
define	VERB
defined	VERB
defines	VERB
defining	VERB
definitely	ADV
degree	NOUN
degrees	NOUN
delay	NOUN
delayed	VERB
delaying	VERB
delays	NOUN
delegate	NOUN
delegates	NOUN
delegation	NOUN
delegations	NOUN
deliberate	ADJ
deliberately	ADV
deliver	VERB
delivered	VERB
delivering	VERB
delivers	VERB
demand	NOUN
demanded	VERB
demanding	VERB
demands	NOUN
democracies	NOUN
democracy	NOUN
democratic	ADJ
democraticly	ADV
demonstrate	VERB
demonstrated	VERB
demonstrates	VERB
demonstrating	VERB
demonstration	NOUN
demonstrations	NOUN
denied	VERB
denies	VERB
dense	ADJ
densely	ADV
deny	VERB
denying	VERB
depart	VERB
departed	VERB
departing	VERB
department	NOUN
departments	NOUN
departs	VERB
departure	NOUN
departures	NOUN
depend	VERB
depended	VERB
depending	VERB
depends	VERB
deploy	VERB
deployed	VERB
deploying	VERB
deployment	NOUN
deployments	NOUN
deploys	VERB
deposit	NOUN
deposits	NOUN
depth	NOUN
depths	NOUN
deputies	NOUN
deputy	NOUN
describe	VERB
described	VERB
describes	VERB
describing	VERB
desert	NOUN
deserts	NOUN
deserve	VERB
deserved	VERB
deserves	VERB
deserving	VERB
design	NOUN
designed	VERB
designing	VERB
designs	NOUN
desire	NOUN
desires	NOUN
desk	NOUN
desks	NOUN
desperate	ADJ
desperately	ADV
despite	OTHER
destination	NOUN
destinations	NOUN
destroy	VERB
destroyed	VERB
destroying	VERB
destroys	VERB
destruction	NOUN
destructions	NOUN
detail	NOUN
detailed	VERB
detailing	VERB
details	NOUN
detain	VERB
detained	VERB
detainee	NOUN
detainees	NOUN
detaining	VERB
detains	VERB
detention	NOUN
detentions	NOUN
deter	VERB
detered	VERB
detering	VERB
determine	VERB
determined	VERB
determines	VERB
determining	VERB
deters	VERB
devastating	ADJ
devastatingly	ADV
develop	VERB
developed	VERB
developing	VERB
develops	VERB
device	NOUN
devices	NOUN
diagnoses	NOUN
diagnosis	NOUN
dialogue	NOUN
dialogues	NOUN
diameter	NOUN
diameters	NOUN
did	OTHER
didn	OTHER
die	VERB
died	VERB
dies	VERB
diesel	NOUN
diesels	NOUN
diet	NOUN
diets	NOUN
differ	VERB
difference	NOUN
differences	NOUN
different	ADJ
differently	ADV
differred	VERB
differring	VERB
differs	VERB
difficult	ADJ
difficultly	ADV
dig	VERB
digging	VERB
digs	VERB
diing	VERB
dinner	NOUN
dinners	NOUN
diplomacies	NOUN
diplomacy	NOUN
diplomat	NOUN
diplomatic	ADJ
diplomaticly	ADV
diplomats	NOUN
dire	ADJ
direct	ADJ
direction	NOUN
directions	NOUN
directly	ADV
director	NOUN
directors	NOUN
direly	ADV
dirty	ADJ
disagree	VERB
disagreed	VERB
disagrees	VERB
disagreing	VERB
disappear	VERB
disappeared	VERB
disappearing	VERB
disappears	VERB
disaster	NOUN
disasters	NOUN
discipline	NOUN
disciplines	NOUN
discourse	NOUN
discourses	NOUN
discover	VERB
discovered	VERB
discoveries	NOUN
discovering	VERB
discovers	VERB
discovery	NOUN
discuss	VERB
discussed	VERB
discusses	VERB
discussing	VERB
discussion	NOUN
discussions	NOUN
disease	NOUN
diseases	NOUN
dismiss	VERB
dismissed	VERB
dismisses	VERB
dismissing	VERB
display	VERB
displayed	VERB
displaying	VERB
displays	VERB
dispute	NOUN
disputed	VERB
disputes	NOUN
disputing	VERB
disrupt	VERB
disrupted	VERB
disrupting	VERB
disrupts	VERB
dissolve	VERB
dissolved	VERB
dissolves	VERB
dissolving	VERB
distance	NOUN
distances	NOUN
distant	ADJ
distantly	ADV
distinct	ADJ
distinctly	ADV
distribute	VERB
distributed	VERB
distributes	VERB
distributing	VERB
district	NOUN
districts	NOUN
diverse	ADJ
diversely	ADV
divide	VERB
divided	VERB
divides	VERB
dividing	VERB
divine	ADJ
divinely	ADV
division	NOUN
divisions	NOUN
do	OTHER
doctor	NOUN
doctors	NOUN
doctrine	NOUN
doctrines	NOUN
document	NOUN
documents	NOUN
does	OTHER
doesn	OTHER
dog	NOUN
dogs	NOUN
doing	OTHER
dollar	NOUN
dollars	NOUN
domain	NOUN
domains	NOUN
domestic	ADJ
domesticly	ADV
dominant	ADJ
dominantly	ADV
dominate	VERB
dominated	VERB
dominates	VERB
dominating	VERB
don	OTHER
donate	VERB
donated	VERB
donates	VERB
donating	VERB
done	VERB
door	NOUN
doors	NOUN
dose	NOUN
doses	NOUN
double	ADJ
doubled	VERB
doubles	VERB
doubling	VERB
doubly	ADV
doubt	VERB
doubted	VERB
doubting	VERB
doubts	VERB
down	OTHER
download	VERB
downloaded	VERB
downloading	VERB
downloads	VERB
downtown	NOUN
downtowns	NOUN
dozen	NOUN
dozens	NOUN
draft	NOUN
drafts	NOUN
drag	VERB
dragged	VERB
dragging	VERB
drags	VERB
drama	NOUN
dramas	NOUN
dramatic	ADJ
dramaticly	ADV
drank	VERB
drastic	ADJ
drasticly	ADV
draw	VERB
drawing	VERB
drawn	VERB
draws	VERB
dream	NOUN
dreams	NOUN
drew	VERB
drill	NOUN
drills	NOUN
drink	NOUN
drinking	VERB
drinks	NOUN
drive	NOUN
driven	VERB
driver	NOUN
drivers	NOUN
drives	NOUN
driving	VERB
drone	NOUN
drones	NOUN
drop	VERB
dropped	VERB
dropping	VERB
drops	VERB
drought	NOUN
droughts	NOUN
drove	VERB
drown	VERB
drowned	VERB
drowning	VERB
drowns	VERB
drug	NOUN
drugs	NOUN
drunk	VERB
dry	ADJ
dual	ADJ
dually	ADV
due	ADJ
dug	VERB
dumb	ADJ
dumbly	ADV
during	OTHER
dutch	ADJ
duties	NOUN
duty	NOUN
each	OTHER
eager	ADJ
eagerly	ADV
early	ADJ
earn	VERB
earned	VERB
earning	VERB
earns	VERB
earth	NOUN
earthquake	NOUN
earthquakes	NOUN
earths	NOUN
ease	VERB
eased	VERB
eases	VERB
easily	ADV
easing	VERB
east	NOUN
eastern	ADJ
easternly	ADV
easts	NOUN
easy	ADJ
eat	VERB
eaten	VERB
eating	VERB
eats	VERB
echo	NOUN
echoed	VERB
echoes	NOUN
echoing	VERB
economic	ADJ
economicly	ADV
economies	NOUN
economist	NOUN
economists	NOUN
economy	NOUN
ecuadorian	ADJ
edge	NOUN
edges	NOUN
edit	VERB
edited	VERB
editing	VERB
editor	NOUN
editors	NOUN
edits	VERB
education	NOUN
educations	NOUN
effect	NOUN
effective	ADJ
effectively	ADV
effects	NOUN
efficient	ADJ
efficiently	ADV
effort	NOUN
efforts	NOUN
egyptian	ADJ
elderly	ADJ
elect	VERB
elected	VERB
electing	VERB
election	NOUN
elections	NOUN
electoral	ADJ
electorally	ADV
electric	ADJ
electricities	NOUN
electricity	NOUN
electricly	ADV
electronic	ADJ
electronicly	ADV
elects	VERB
element	NOUN
elements	NOUN
eligible	ADJ
eligibly	ADV
eliminate	VERB
eliminated	VERB
eliminates	VERB
eliminating	VERB
elite	NOUN
elitely	ADV
elites	NOUN
elsewhere	ADV
email	NOUN
emails	NOUN
embargo	NOUN
embargoes	NOUN
embargos	NOUN
embassies	NOUN
embassy	NOUN
emerge	VERB
emerged	VERB
emergencies	NOUN
emergency	NOUN
emerges	VERB
emerging	VERB
eminent	ADJ
eminently	ADV
emission	NOUN
emissions	NOUN
emotional	ADJ
emotionally	ADV
emphases	NOUN
emphasis	NOUN
emphasize	VERB
emphasized	VERB
emphasizes	VERB
emphasizing	VERB
empire	NOUN
empires	NOUN
employ	VERB
employed	VERB
employee	NOUN
employees	NOUN
employer	NOUN
employers	NOUN
employing	VERB
employment	NOUN
employments	NOUN
employs	VERB
empty	ADJ
enable	VERB
enabled	VERB
enables	VERB
enabling	VERB
encounter	VERB
encountered	VERB
encountering	VERB
encounters	VERB
encourage	VERB
encouraged	VERB
encourages	VERB
encouraging	VERB
end	NOUN
ended	VERB
ending	VERB
endorse	VERB
endorsed	VERB
endorses	VERB
endorsing	VERB
ends	NOUN
endure	VERB
endured	VERB
endures	VERB
enduring	VERB
enemies	NOUN
enemy	NOUN
energies	NOUN
energy	NOUN
enforce	VERB
enforced	VERB
enforces	VERB
enforcing	VERB
engage	VERB
engaged	VERB
engages	VERB
engaging	VERB
engine	NOUN
engineer	NOUN
engineers	NOUN
engines	NOUN
english	ADJ
enhance	VERB
enhanced	VERB
enhances	VERB
enhancing	VERB
enjoy	VERB
enjoyed	VERB
enjoying	VERB
enjoys	VERB
enormous	ADJ
enormously	ADV
ensure	VERB
ensured	VERB
ensures	VERB
ensuring	VERB
enter	VERB
entered	VERB
entering	VERB
enters	VERB
entire	ADJ
entirely	ADV
entrance	NOUN
entrances	NOUN
entries	NOUN
entry	NOUN
environment	NOUN
environments	NOUN
episode	NOUN
episodes	NOUN
equal	ADJ
equally	ADV
equipment	NOUN
equipments	NOUN
era	NOUN
eras	NOUN
error	NOUN
errors	NOUN
escalate	VERB
escalated	VERB
escalates	VERB
escalating	VERB
escape	NOUN
escaped	VERB
escapes	NOUN
escaping	VERB
especially	ADV
essential	ADJ
essentially	ADV
establish	VERB
established	VERB
establishes	VERB
establishing	VERB
estate	NOUN
estates	NOUN
estimate	VERB
estimated	VERB
estimates	VERB
estimating	VERB
estonian	ADJ
ethical	ADJ
ethically	ADV
ethics	NOUN
ethicses	NOUN
ethiopian	ADJ
ethnic	ADJ
ethnicly	ADV
european	ADJ
evacuate	VERB
evacuated	VERB
evacuates	VERB
evacuating	VERB
evacuation	NOUN
evacuations	NOUN
evaluate	VERB
evaluated	VERB
evaluates	VERB
evaluating	VERB
even	OTHER
evening	NOUN
evenings	NOUN
event	NOUN
events	NOUN
eventually	ADV
ever	OTHER
everyday	ADJ
evidence	NOUN
evidences	NOUN
evident	ADJ
evidently	ADV
exact	ADJ
exactly	ADV
exam	NOUN
examine	VERB
examined	VERB
examines	VERB
examining	VERB
example	NOUN
examples	NOUN
exams	NOUN
exceed	VERB
exceeded	VERB
exceeding	VERB
exceeds	VERB
excellent	ADJ
excellently	ADV
exchange	NOUN
exchanged	VERB
exchanges	NOUN
exchanging	VERB
exclude	VERB
excluded	VERB
excludes	VERB
excluding	VERB
exclusive	ADJ
exclusively	ADV
excuse	NOUN
excuses	NOUN
execute	VERB
executed	VERB
executes	VERB
executing	VERB
execution	NOUN
executions	NOUN
executive	ADJ
executively	ADV
exempt	ADJ
exemptly	ADV
exercise	NOUN
exercises	NOUN
exile	NOUN
exiles	NOUN
exist	VERB
existed	VERB
existing	ADJ
existingly	ADV
exists	VERB
exit	NOUN
exits	NOUN
expand	VERB
expanded	VERB
expanding	VERB
expands	VERB
expansion	NOUN
expansions	NOUN
expect	VERB
expected	VERB
expecting	VERB
expects	VERB
expel	VERB
expelled	VERB
expelling	VERB
expels	VERB
expense	NOUN
expenses	NOUN
expensive	ADJ
expensively	ADV
experience	VERB
experienced	VERB
experiences	VERB
experiencing	VERB
expert	NOUN
experts	NOUN
explain	VERB
explained	VERB
explaining	VERB
explains	VERB
explicit	ADJ
explicitly	ADV
explode	VERB
exploded	VERB
explodes	VERB
exploding	VERB
explore	VERB
explored	VERB
explores	VERB
exploring	VERB
explosion	NOUN
explosions	NOUN
explosive	NOUN
explosives	NOUN
export	NOUN
exported	VERB
exporting	VERB
exports	NOUN
expose	VERB
exposed	VERB
exposes	VERB
exposing	VERB
exposure	NOUN
exposures	NOUN
express	ADJ
expressed	VERB
expresses	VERB
expressing	VERB
expressly	ADV
extend	VERB
extended	VERB
extending	VERB
extends	VERB
extension	NOUN
extensions	NOUN
extent	NOUN
extents	NOUN
external	ADJ
externally	ADV
extra	ADJ
extraly	ADV
extreme	ADJ
extremely	ADV
extremist	NOUN
extremists	NOUN
eye	NOUN
eyes	NOUN
face	NOUN
faced	VERB
faces	NOUN
facilities	NOUN
facility	NOUN
facing	VERB
fact	NOUN
factor	NOUN
factories	NOUN
factors	NOUN
factory	NOUN
facts	NOUN
fail	VERB
failed	VERB
failing	VERB
fails	VERB
failure	NOUN
failures	NOUN
fair	ADJ
fairly	ADV
faith	NOUN
faiths	NOUN
fake	ADJ
fakely	ADV
fall	NOUN
fallen	VERB
falling	VERB
falls	NOUN
fame	NOUN
fames	NOUN
families	NOUN
family	NOUN
famous	ADJ
famously	ADV
far	ADJ
farm	NOUN
farmer	NOUN
farmers	NOUN
farms	NOUN
fashion	NOUN
fashions	NOUN
fast	ADJ
fastly	ADV
father	NOUN
fathers	NOUN
fault	NOUN
faults	NOUN
favor	NOUN
favored	VERB
favoring	VERB
favors	NOUN
fear	NOUN
feared	VERB
fearing	VERB
fears	NOUN
feature	NOUN
featured	VERB
features	NOUN
featuring	VERB
fed	VERB
federal	ADJ
federally	ADV
fee	NOUN
feed	VERB
feeding	VERB
feeds	VERB
feel	VERB
feeling	VERB
feels	VERB
fees	NOUN
feet	NOUN
fell	VERB
fellow	ADJ
fellowly	ADV
felt	VERB
female	NOUN
females	NOUN
femaly	ADV
fence	NOUN
fences	NOUN
festival	NOUN
festivals	NOUN
few	OTHER
field	NOUN
fields	NOUN
fierce	ADJ
fiercely	ADV
fight	VERB
fighter	NOUN
fighters	NOUN
fighting	NOUN
fightings	NOUN
fights	VERB
figure	NOUN
figures	NOUN
file	VERB
filed	VERB
files	VERB
filing	VERB
filipino	ADJ
fill	VERB
filled	VERB
filling	VERB
fills	VERB
film	NOUN
films	NOUN
final	ADJ
finally	ADV
finance	NOUN
financed	VERB
finances	NOUN
financial	ADJ
financially	ADV
financing	VERB
find	VERB
finding	NOUN
findings	NOUN
finds	VERB
fine	ADJ
finely	ADV
finish	VERB
finished	VERB
finishes	VERB
finishing	VERB
finnish	ADJ
fire	NOUN
fired	VERB
fires	NOUN
firing	VERB
firm	NOUN
firmly	ADV
firms	NOUN
first	ADJ
firstly	ADV
fiscal	ADJ
fiscally	ADV
fish	NOUN
fishes	NOUN
fit	ADJ
fix	VERB
fixed	VERB
fixes	VERB
fixing	VERB
flag	NOUN
flags	NOUN
flat	ADJ
flatly	ADV
fled	VERB
flee	VERB
fleeing	VERB
flees	VERB
fleet	NOUN
fleets	NOUN
flew	VERB
flexible	ADJ
flexibly	ADV
flies	VERB
flight	NOUN
flights	NOUN
flood	NOUN
flooded	VERB
flooding	VERB
floods	NOUN
floor	NOUN
floors	NOUN
flow	NOUN
flowed	VERB
flowing	VERB
flown	VERB
flows	NOUN
flu	NOUN
fluid	ADJ
fluidly	ADV
flus	NOUN
fly	VERB
flying	VERB
focus	NOUN
focused	VERB
focuses	NOUN
focusing	VERB
follow	VERB
followed	VERB
following	VERB
follows	VERB
fond	ADJ
fondly	ADV
food	NOUN
foods	NOUN
foot	NOUN
football	NOUN
footballs	NOUN
foots	NOUN
for	OTHER
force	NOUN
forced	VERB
forces	NOUN
forcing	VERB
forecast	NOUN
forecasted	VERB
forecasting	VERB
forecasts	NOUN
foreign	ADJ
foreignly	ADV
forest	NOUN
forests	NOUN
forever	ADV
forget	VERB
forgets	VERB
forgetting	VERB
forgot	VERB
forgotten	VERB
form	NOUN
formal	ADJ
formally	ADV
formation	NOUN
formations	NOUN
formed	VERB
former	ADJ
formerly	ADV
forming	VERB
forms	NOUN
fortune	NOUN
fortunes	NOUN
forum	NOUN
forums	NOUN
forward	ADV
foster	VERB
fostered	VERB
fostering	VERB
fosters	VERB
fought	VERB
found	VERB
fragile	ADJ
fragily	ADV
frame	VERB
framed	VERB
frames	VERB
framing	VERB
frank	ADJ
frankly	ADV
fraud	NOUN
frauds	NOUN
free	ADJ
freed	VERB
freedom	NOUN
freedoms	NOUN
freely	ADV
frees	VERB
freeze	VERB
freezes	VERB
freezing	VERB
freing	VERB
french	ADJ
frequencies	NOUN
frequency	NOUN
frequent	ADJ
frequently	ADV
fresh	ADJ
freshly	ADV
friend	NOUN
friendly	ADJ
friends	NOUN
from	OTHER
front	NOUN
frontier	NOUN
frontiers	NOUN
frontly	ADV
fronts	NOUN
froze	VERB
frozen	VERB
fruit	NOUN
fruits	NOUN
fuel	NOUN
fueled	VERB
fueling	VERB
fuels	NOUN
fulfill	VERB
fulfilled	VERB
fulfilling	VERB
fulfills	VERB
full	ADJ
fullly	ADV
fully	ADV
function	NOUN
functions	NOUN
fund	NOUN
fundamental	ADJ
fundamentally	ADV
funded	VERB
funding	VERB
funds	NOUN
funeral	NOUN
funerals	NOUN
funny	ADJ
furious	ADJ
furiously	ADV
further	OTHER
future	NOUN
futurely	ADV
futures	NOUN
gain	VERB
gained	VERB
gaining	VERB
gains	VERB
game	NOUN
games	NOUN
gap	NOUN
gaps	NOUN
garden	NOUN
gardens	NOUN
gas	NOUN
gases	NOUN
gate	NOUN
gates	NOUN
gather	VERB
gathered	VERB
gathering	VERB
gathers	VERB
gave	VERB
geese	NOUN
gender	NOUN
genders	NOUN
general	NOUN
generally	ADV
generals	NOUN
generate	VERB
generated	VERB
generates	VERB
generating	VERB
generation	NOUN
generations	NOUN
generous	ADJ
generously	ADV
genetic	ADJ
geneticly	ADV
genocide	NOUN
genocides	NOUN
gentle	ADJ
gently	ADV
genuine	ADJ
genuinely	ADV
georgian	ADJ
german	ADJ
gesture	NOUN
gestures	NOUN
get	VERB
gets	VERB
getting	VERB
ghanaian	ADJ
giant	ADJ
giantly	ADV
girl	NOUN
girls	NOUN
give	VERB
given	VERB
gives	VERB
giving	VERB
glad	ADJ
gladly	ADV
global	ADJ
globally	ADV
go	VERB
goal	NOUN
goals	NOUN
goes	VERB
going	VERB
gold	NOUN
golden	ADJ
goldenly	ADV
golds	NOUN
golf	NOUN
golfs	NOUN
gone	VERB
good	NOUN
goodly	ADV
goods	NOUN
goose	NOUN
got	VERB
gotten	VERB
govern	VERB
governed	VERB
governing	VERB
government	NOUN
governments	NOUN
governor	NOUN
governors	NOUN
governs	VERB
grab	VERB
grabbed	VERB
grabbing	VERB
grabs	VERB
grade	NOUN
grades	NOUN
gradually	ADV
grain	NOUN
grains	NOUN
grand	ADJ
grandly	ADV
grant	NOUN
granted	VERB
granting	VERB
grants	NOUN
graph	NOUN
graphs	NOUN
grass	NOUN
grasses	NOUN
grave	ADJ
gravely	ADV
gray	ADJ
great	ADJ
greatly	ADV
greek	ADJ
green	ADJ
greenly	ADV
greet	VERB
greeted	VERB
greeting	VERB
greets	VERB
grew	VERB
grim	ADJ
grimly	ADV
gross	ADJ
grossly	ADV
ground	NOUN
grounds	NOUN
group	NOUN
groups	NOUN
grow	VERB
growing	VERB
grown	VERB
grows	VERB
growth	NOUN
growths	NOUN
guard	NOUN
guarded	VERB
guarding	VERB
guards	NOUN
guerrilla	NOUN
guerrillas	NOUN
guess	VERB
guessed	VERB
guesses	VERB
guessing	VERB
guest	NOUN
guests	NOUN
guidance	NOUN
guidances	NOUN
guide	VERB
guided	VERB
guides	VERB
guiding	VERB
guilty	ADJ
gulf	NOUN
gulfs	NOUN
gun	NOUN
guns	NOUN
had	OTHER
haitian	ADJ
half	NOUN
halt	VERB
halted	VERB
halting	VERB
halts	VERB
halves	NOUN
hamper	VERB
hampered	VERB
hampering	VERB
hampers	VERB
hand	NOUN
handle	VERB
handled	VERB
handles	VERB
handling	VERB
hands	NOUN
hang	VERB
hanging	VERB
hangs	VERB
happen	VERB
happened	VERB
happening	VERB
happens	VERB
happy	ADJ
harbor	NOUN
harbors	NOUN
hard	ADJ
hardly	ADV
hardware	NOUN
hardwares	NOUN
harm	NOUN
harmed	VERB
harming	VERB
harms	NOUN
harsh	ADJ
harshly	ADV
has	OTHER
hasn	OTHER
hat	NOUN
hate	NOUN
hates	NOUN
hats	NOUN
have	OTHER
haven	OTHER
having	OTHER
he	OTHER
head	NOUN
headed	VERB
heading	VERB
headline	NOUN
headlines	NOUN
headquarters	NOUN
headquarterses	NOUN
heads	NOUN
health	NOUN
healths	NOUN
healthy	ADJ
hear	VERB
heard	VERB
hearing	NOUN
hearings	NOUN
hears	VERB
heart	NOUN
hearts	NOUN
heat	NOUN
heats	NOUN
heavily	ADV
heavy	ADJ
height	NOUN
heights	NOUN
held	VERB
helicopter	NOUN
helicopters	NOUN
help	VERB
helped	VERB
helping	VERB
helps	VERB
hence	ADV
her	OTHER
here	OTHER
hero	NOUN
heroes	NOUN
hers	OTHER
herself	OTHER
hesitate	VERB
hesitated	VERB
hesitates	VERB
hesitating	VERB
hid	VERB
hidden	VERB
hide	VERB
hides	VERB
hiding	VERB
high	ADJ
highlight	VERB
highlighted	VERB
highlighting	VERB
highlights	VERB
highly	ADV
hill	NOUN
hills	NOUN
him	OTHER
himself	OTHER
hint	VERB
hinted	VERB
hinting	VERB
hints	VERB
hire	VERB
hired	VERB
hires	VERB
hiring	VERB
his	OTHER
historic	ADJ
historicly	ADV
histories	NOUN
history	NOUN
hit	NOUN
hits	NOUN
hitting	VERB
hold	VERB
holding	VERB
holds	VERB
hollow	ADJ
hollowly	ADV
holy	ADJ
home	NOUN
homeland	NOUN
homelands	NOUN
homes	NOUN
honest	ADJ
honestly	ADV
honor	NOUN
honored	VERB
honoring	VERB
honors	NOUN
hope	NOUN
hoped	VERB
hopes	NOUN
hoping	VERB
horizon	NOUN
horizons	NOUN
horror	NOUN
horrors	NOUN
horse	NOUN
horses	NOUN
hospital	NOUN
hospitals	NOUN
host	NOUN
hostage	NOUN
hostages	NOUN
hosted	VERB
hostile	ADJ
hostilities	NOUN
hostility	NOUN
hostily	ADV
hosting	VERB
hosts	NOUN
hot	ADJ
hotel	NOUN
hotels	NOUN
hour	NOUN
hours	NOUN
house	NOUN
housed	VERB
household	NOUN
households	NOUN
houses	NOUN
housing	NOUN
housings	NOUN
hover	VERB
hovered	VERB
hovering	VERB
hovers	VERB
how	OTHER
however	OTHER
huge	ADJ
hugely	ADV
human	NOUN
humanitarian	ADJ
humanitarianly	ADV
humanities	NOUN
humanity	NOUN
humanly	ADV
humans	NOUN
humble	ADJ
humbly	ADV
hung	VERB
hungarian	ADJ
hunger	NOUN
hungers	NOUN
hungry	ADJ
hunt	VERB
hunted	VERB
hunting	VERB
hunts	VERB
hurricane	NOUN
hurricanes	NOUN
hurt	VERB
hurting	VERB
hurts	VERB
hypotheses	NOUN
hypothesis	NOUN
i	OTHER
ice	NOUN
ices	NOUN
idea	NOUN
ideal	ADJ
ideally	ADV
ideas	NOUN
identified	VERB
identifies	VERB
identify	VERB
identifying	VERB
identities	NOUN
identity	NOUN
ideologies	NOUN
ideology	NOUN
if	OTHER
ignite	VERB
ignited	VERB
ignites	VERB
igniting	VERB
ignore	VERB
ignored	VERB
ignores	VERB
ignoring	VERB
illegal	ADJ
illegally	ADV
illustrate	VERB
illustrated	VERB
illustrates	VERB
illustrating	VERB
image	NOUN
images	NOUN
imagine	VERB
imagined	VERB
imagines	VERB
imagining	VERB
immediate	ADJ
immediately	ADV
immigrant	NOUN
immigrants	NOUN
immigration	NOUN
immigrations	NOUN
imminent	ADJ
imminently	ADV
immune	ADJ
immunely	ADV
impact	NOUN
impacted	VERB
impacting	VERB
impacts	NOUN
imperial	ADJ
imperially	ADV
implement	VERB
implemented	VERB
implementing	VERB
implements	VERB
implicit	ADJ
implicitly	ADV
implied	VERB
implies	VERB
imply	VERB
implying	VERB
import	NOUN
important	ADJ
importantly	ADV
imported	VERB
importing	VERB
imports	NOUN
impose	VERB
imposed	VERB
imposes	VERB
imposing	VERB
improve	VERB
improved	VERB
improves	VERB
improving	VERB
in	OTHER
incident	NOUN
incidents	NOUN
include	VERB
included	VERB
includes	VERB
including	VERB
income	NOUN
incomes	NOUN
increase	NOUN
increased	VERB
increases	NOUN
increasing	VERB
increasingly	ADV
indeed	ADV
independence	NOUN
independences	NOUN
independent	ADJ
independently	ADV
index	NOUN
indian	ADJ
indicate	VERB
indicated	VERB
indicates	VERB
indicating	VERB
indices	NOUN
indigenous	ADJ
indigenously	ADV
individual	NOUN
individuals	NOUN
indonesian	ADJ
industrial	ADJ
industrially	ADV
industries	NOUN
industry	NOUN
inevitable	ADJ
inevitably	ADV
infamous	ADJ
infamously	ADV
infantries	NOUN
infantry	NOUN
infect	VERB
infected	VERB
infecting	VERB
infects	VERB
inflation	NOUN
inflations	NOUN
influence	NOUN
influences	NOUN
influential	ADJ
influentially	ADV
inform	VERB
informal	ADJ
informally	ADV
information	NOUN
informations	NOUN
informed	VERB
informing	VERB
informs	VERB
infrastructure	NOUN
infrastructures	NOUN
initially	ADV
initiate	VERB
initiated	VERB
initiates	VERB
initiating	VERB
initiative	NOUN
initiatives	NOUN
injure	VERB
injured	VERB
injures	VERB
injuries	NOUN
injuring	VERB
injury	NOUN
inner	ADJ
innerly	ADV
innocent	ADJ
innocently	ADV
innovation	NOUN
innovations	NOUN
inquiries	NOUN
inquiry	NOUN
insider	NOUN
insiders	NOUN
insist	VERB
insisted	VERB
insisting	VERB
insists	VERB
inspect	VERB
inspected	VERB
inspecting	VERB
inspection	NOUN
inspections	NOUN
inspector	NOUN
inspectors	NOUN
inspects	VERB
inspire	VERB
inspired	VERB
inspires	VERB
inspiring	VERB
install	VERB
installed	VERB
installing	VERB
installs	VERB
instance	NOUN
instances	NOUN
instead	ADV
institute	NOUN
institutes	NOUN
institution	NOUN
institutions	NOUN
instrument	NOUN
instruments	NOUN
insult	VERB
insulted	VERB
insulting	VERB
insults	VERB
insurance	NOUN
insurances	NOUN
insurgencies	NOUN
insurgency	NOUN
insurgent	NOUN
insurgents	NOUN
intelligence	NOUN
intelligences	NOUN
intend	VERB
intended	VERB
intending	VERB
intends	VERB
intense	ADJ
intensely	ADV
intensified	VERB
intensifies	VERB
intensify	VERB
intensifying	VERB
intent	NOUN
intention	NOUN
intentions	NOUN
intents	NOUN
intercept	VERB
intercepted	VERB
intercepting	VERB
intercepts	VERB
interest	NOUN
interests	NOUN
interfere	VERB
interfered	VERB
interferes	VERB
interfering	VERB
interim	ADJ
interimly	ADV
interior	NOUN
interiors	NOUN
internal	ADJ
internally	ADV
international	ADJ
internationally	ADV
internet	NOUN
internets	NOUN
intervention	NOUN
interventions	NOUN
interview	NOUN
interviewed	VERB
interviewing	VERB
interviews	NOUN
intimate	ADJ
intimately	ADV
into	OTHER
introduce	VERB
introduced	VERB
introduces	VERB
introducing	VERB
invade	VERB
invaded	VERB
invades	VERB
invading	VERB
invasion	NOUN
invasions	NOUN
invest	VERB
invested	VERB
investigate	VERB
investigated	VERB
investigates	VERB
investigating	VERB
investigation	NOUN
investigations	NOUN
investigator	NOUN
investigators	NOUN
investing	VERB
investment	NOUN
investments	NOUN
investor	NOUN
investors	NOUN
invests	VERB
invisible	ADJ
invisibly	ADV
invite	VERB
invited	VERB
invites	VERB
inviting	VERB
involve	VERB
involved	VERB
involves	VERB
involving	VERB
iranian	ADJ
iraqi	ADJ
irish	ADJ
is	OTHER
island	NOUN
islands	NOUN
isn	OTHER
isolate	VERB
isolated	VERB
isolates	VERB
isolating	VERB
israeli	ADJ
issue	NOUN
issued	VERB
issues	NOUN
issuing	VERB
it	OTHER
italian	ADJ
item	NOUN
items	NOUN
its	OTHER
itself	OTHER
jail	NOUN
jails	NOUN
jamaican	ADJ
japanese	ADJ
jet	NOUN
jets	NOUN
job	NOUN
jobs	NOUN
join	VERB
joined	VERB
joining	VERB
joins	VERB
joint	ADJ
jointly	ADV
jordanian	ADJ
journal	NOUN
journalist	NOUN
journalists	NOUN
journals	NOUN
judge	NOUN
judged	VERB
judges	NOUN
judging	VERB
judgment	NOUN
judgments	NOUN
judicial	ADJ
judicially	ADV
jump	VERB
jumped	VERB
jumping	VERB
jumps	VERB
junior	ADJ
juniorly	ADV
juries	NOUN
jury	NOUN
just	OTHER
justice	NOUN
justices	NOUN
justified	VERB
justifies	VERB
justify	VERB
justifying	VERB
kazakh	ADJ
keen	ADJ
keenly	ADV
keep	VERB
keeping	VERB
keeps	VERB
kenyan	ADJ
kept	VERB
key	ADJ
kick	VERB
kicked	VERB
kicking	VERB
kicks	VERB
kid	NOUN
kidnap	VERB
kidnaped	VERB
kidnaping	VERB
kidnaps	VERB
kids	NOUN
kill	VERB
killed	VERB
killing	VERB
kills	VERB
kilometer	NOUN
kilometers	NOUN
kind	ADJ
kindly	ADV
king	NOUN
kingdom	NOUN
kingdoms	NOUN
kings	NOUN
kneel	VERB
kneeling	VERB
kneels	VERB
knelt	VERB
knew	VERB
knife	NOUN
knives	NOUN
knock	VERB
knocked	VERB
knocking	VERB
knocks	VERB
know	VERB
knowing	VERB
knowledge	NOUN
knowledges	NOUN
known	VERB
knows	VERB
korean	ADJ
kurdish	ADJ
kuwaiti	ADJ
lab	NOUN
label	NOUN
labeled	VERB
labeling	VERB
labels	NOUN
labor	NOUN
labors	NOUN
labs	NOUN
lack	NOUN
lacked	VERB
lacking	VERB
lacks	NOUN
laid	VERB
lain	VERB
lake	NOUN
lakes	NOUN
land	NOUN
landed	VERB
landing	VERB
lands	NOUN
landscape	NOUN
landscapes	NOUN
language	NOUN
languages	NOUN
laptop	NOUN
laptops	NOUN
large	ADJ
largely	ADV
last	VERB
lasted	VERB
lasting	VERB
lasts	VERB
late	ADJ
lately	ADV
later	ADV
latin	ADJ
latter	ADJ
latterly	ADV
latvian	ADJ
laugh	VERB
laughed	VERB
laughing	VERB
laughs	VERB
launch	NOUN
launched	VERB
launches	NOUN
launching	VERB
law	NOUN
lawmaker	NOUN
lawmakers	NOUN
laws	NOUN
lawsuit	NOUN
lawsuits	NOUN
lawyer	NOUN
lawyers	NOUN
lay	VERB
laying	VERB
lays	VERB
lazy	ADJ
lead	VERB
leader	NOUN
leaders	NOUN
leadership	NOUN
leaderships	NOUN
leading	ADJ
leadingly	ADV
leads	VERB
leaf	NOUN
league	NOUN
leagues	NOUN
learn	VERB
learned	VERB
learning	VERB
learns	VERB
least	ADV
leave	VERB
leaves	NOUN
leaving	VERB
lebanese	ADJ
led	VERB
left	ADJ
leftly	ADV
legal	ADJ
legally	ADV
legislative	ADJ
legislatively	ADV
legitimate	ADJ
legitimately	ADV
lend	VERB
lending	VERB
lends	VERB
lent	VERB
less	ADV
let	VERB
lethal	ADJ
lethally	ADV
lets	VERB
letting	VERB
level	NOUN
levels	NOUN
levied	VERB
levies	VERB
levy	VERB
levying	VERB
liable	ADJ
liably	ADV
liberal	ADJ
liberally	ADV
liberate	VERB
liberated	VERB
liberates	VERB
liberating	VERB
liberties	NOUN
liberty	NOUN
libraries	NOUN
library	NOUN
libyan	ADJ
license	NOUN
licenses	NOUN
lie	VERB
lies	VERB
lieutenant	NOUN
lieutenants	NOUN
life	NOUN
lift	VERB
lifted	VERB
lifting	VERB
lifts	VERB
light	NOUN
lightly	ADV
lights	NOUN
like	VERB
liked	VERB
likely	ADJ
likes	VERB
likewise	ADV
liking	VERB
limit	NOUN
limited	ADJ
limitedly	ADV
limiting	VERB
limits	NOUN
line	NOUN
linear	ADJ
linearly	ADV
lines	NOUN
link	NOUN
linked	VERB
linking	VERB
links	NOUN
lion	NOUN
lions	NOUN
liquid	NOUN
liquidly	ADV
liquids	NOUN
list	NOUN
listed	VERB
listen	VERB
listened	VERB
listening	VERB
listens	VERB
listing	VERB
lists	NOUN
literally	ADV
lithuanian	ADJ
little	ADJ
littly	ADV
live	ADJ
lived	VERB
lively	ADJ
lives	NOUN
living	VERB
load	VERB
loaded	VERB
loading	VERB
loads	VERB
loaf	NOUN
loaves	NOUN
lobbied	VERB
lobbies	VERB
lobby	VERB
lobbying	VERB
local	ADJ
locally	ADV
locate	VERB
located	VERB
locates	VERB
locating	VERB
lock	VERB
locked	VERB
locking	VERB
locks	VERB
logic	NOUN
logics	NOUN
lone	ADJ
lonely	ADV
long	ADJ
longly	ADV
look	NOUN
looked	VERB
looking	VERB
looks	NOUN
loom	VERB
loomed	VERB
looming	VERB
looms	VERB
loose	ADJ
loosely	ADV
lose	VERB
loses	VERB
losing	VERB
loss	NOUN
losses	NOUN
lost	VERB
lot	NOUN
lots	NOUN
loud	ADJ
loudly	ADV
love	NOUN
loves	NOUN
low	ADJ
loyal	ADJ
loyally	ADV
lucky	ADJ
lying	VERB
macedonian	ADJ
machine	NOUN
machines	NOUN
mad	ADJ
made	VERB
magazine	NOUN
magazines	NOUN
magic	NOUN
magics	NOUN
main	ADJ
mainland	NOUN
mainlands	NOUN
mainly	ADV
maintain	VERB
maintained	VERB
maintaining	VERB
maintains	VERB
major	ADJ
majorities	NOUN
majority	NOUN
majorly	ADV
make	VERB
makes	VERB
making	VERB
malaysian	ADJ
male	NOUN
males	NOUN
mall	NOUN
malls	NOUN
maly	ADV
man	NOUN
manage	VERB
managed	VERB
manages	VERB
managing	VERB
mandate	NOUN
mandates	NOUN
mans	NOUN
map	NOUN
maps	NOUN
march	VERB
marched	VERB
marches	VERB
marching	VERB
margin	NOUN
margins	NOUN
marine	NOUN
marinely	ADV
marines	NOUN
maritime	ADJ
maritimely	ADV
mark	VERB
marked	VERB
market	NOUN
markets	NOUN
marking	VERB
marks	VERB
married	VERB
marries	VERB
marry	VERB
marrying	VERB
mass	ADJ
massacre	NOUN
massacres	NOUN
massive	ADJ
massively	ADV
massly	ADV
match	VERB
matched	VERB
matches	VERB
matching	VERB
material	NOUN
materials	NOUN
matrices	NOUN
matrix	NOUN
matter	VERB
mattered	VERB
mattering	VERB
matters	VERB
mature	ADJ
maturely	ADV
may	OTHER
maybe	ADV
mayor	NOUN
mayors	NOUN
me	OTHER
meal	NOUN
meals	NOUN
mean	ADJ
meaning	VERB
meanly	ADV
means	VERB
meant	VERB
meanwhile	OTHER
measure	NOUN
measured	VERB
measures	NOUN
measuring	VERB
mechanism	NOUN
mechanisms	NOUN
medal	NOUN
medals	NOUN
media	NOUN
medical	ADJ
medically	ADV
medium	NOUN
mediumly	ADV
meet	VERB
meeting	NOUN
meetings	NOUN
meets	VERB
member	NOUN
members	NOUN
membership	NOUN
memberships	NOUN
memo	NOUN
memoranda	NOUN
memorandum	NOUN
memories	NOUN
memory	NOUN
memos	NOUN
men	NOUN
mental	ADJ
mentally	ADV
mention	VERB
mentioned	VERB
mentioning	VERB
mentions	VERB
mere	ADJ
merely	ADV
merge	VERB
merged	VERB
merges	VERB
merging	VERB
message	NOUN
messages	NOUN
met	VERB
metal	NOUN
metals	NOUN
meter	NOUN
meters	NOUN
method	NOUN
methods	NOUN
metro	NOUN
metros	NOUN
mexican	ADJ
mice	NOUN
middle	ADJ
middly	ADV
midnight	NOUN
midnights	NOUN
might	OTHER
migrant	NOUN
migrants	NOUN
migrate	VERB
migrated	VERB
migrates	VERB
migrating	VERB
migration	NOUN
migrations	NOUN
mild	ADJ
mildly	ADV
mile	NOUN
miles	NOUN
milestone	NOUN
milestones	NOUN
militant	NOUN
militants	NOUN
militaries	NOUN
military	NOUN
militia	NOUN
militias	NOUN
milk	NOUN
milks	NOUN
mill	NOUN
mills	NOUN
mind	NOUN
minds	NOUN
mine	NOUN
mines	NOUN
minister	NOUN
ministers	NOUN
ministries	NOUN
ministry	NOUN
minor	ADJ
minorities	NOUN
minority	NOUN
minorly	ADV
minute	NOUN
minutes	NOUN
missile	NOUN
missiles	NOUN
mission	NOUN
missions	NOUN
mistake	NOUN
mistakes	NOUN
mix	NOUN
mixes	NOUN
mixture	NOUN
mixtures	NOUN
mob	NOUN
mobile	ADJ
mobilize	VERB
mobilized	VERB
mobilizes	VERB
mobilizing	VERB
mobily	ADV
mobs	NOUN
mode	NOUN
model	NOUN
models	NOUN
moderate	ADJ
moderately	ADV
modern	ADJ
modernly	ADV
modes	NOUN
modest	ADJ
modestly	ADV
moldovan	ADJ
moment	NOUN
moments	NOUN
momentum	NOUN
momentums	NOUN
monetary	ADJ
money	NOUN
moneys	NOUN
mongolian	ADJ
monitor	VERB
monitored	VERB
monitoring	VERB
monitors	VERB
monopolies	NOUN
monopoly	NOUN
month	NOUN
months	NOUN
monument	NOUN
monuments	NOUN
mood	NOUN
moods	NOUN
moral	ADJ
morally	ADV
more	OTHER
moreover	OTHER
morning	NOUN
mornings	NOUN
moroccan	ADJ
mortal	ADJ
mortally	ADV
mosque	NOUN
mosques	NOUN
most	OTHER
mostly	ADV
mother	NOUN
mothers	NOUN
motion	NOUN
motions	NOUN
motivate	VERB
motivated	VERB
motivates	VERB
motivating	VERB
motive	NOUN
motives	NOUN
motor	NOUN
motors	NOUN
mount	VERB
mountain	NOUN
mountains	NOUN
mounted	VERB
mounting	VERB
mounts	VERB
mouse	NOUN
mouth	NOUN
mouths	NOUN
move	NOUN
moved	VERB
movement	NOUN
movements	NOUN
moves	NOUN
movie	NOUN
movies	NOUN
moving	VERB
much	ADV
multiple	ADJ
multiply	ADV
multitude	NOUN
multitudes	NOUN
municipal	ADJ
municipally	ADV
murder	NOUN
murdered	VERB
murdering	VERB
murders	NOUN
muscle	NOUN
muscles	NOUN
museum	NOUN
museums	NOUN
music	NOUN
musician	NOUN
musicians	NOUN
musics	NOUN
must	OTHER
mustn	OTHER
mutual	ADJ
mutually	ADV
my	OTHER
myself	OTHER
naked	ADJ
nakedly	ADV
name	NOUN
named	VERB
names	NOUN
naming	VERB
narrative	NOUN
narratives	NOUN
narrow	ADJ
narrowly	ADV
nasty	ADJ
nation	NOUN
national	ADJ
nationally	ADV
nations	NOUN
native	ADJ
natively	ADV
naturally	ADV
nature	NOUN
natures	NOUN
naval	ADJ
navally	ADV
navies	NOUN
navy	NOUN
near	ADJ
nearby	ADV
nearly	ADV
neat	ADJ
neatly	ADV
necessarily	ADV
necessary	ADJ
need	NOUN
needed	VERB
needing	VERB
needs	NOUN
negative	ADJ
negatively	ADV
negotiate	VERB
negotiated	VERB
negotiates	VERB
negotiating	VERB
negotiation	NOUN
negotiations	NOUN
neighbor	NOUN
neighborhood	NOUN
neighborhoods	NOUN
neighbors	NOUN
nervous	ADJ
nervously	ADV
network	NOUN
networks	NOUN
neutral	ADJ
neutrally	ADV
never	OTHER
nevertheless	OTHER
new	ADJ
newly	ADV
news	NOUN
newses	NOUN
newspaper	NOUN
newspapers	NOUN
next	ADJ
nextly	ADV
nice	ADJ
nicely	ADV
nigerian	ADJ
night	NOUN
nights	NOUN
no	OTHER
noble	ADJ
nobly	ADV
nobodies	NOUN
nobody	NOUN
noise	NOUN
noises	NOUN
nomination	NOUN
nominations	NOUN
nonetheless	ADV
noon	NOUN
noons	NOUN
nor	OTHER
nordic	ADJ
normal	ADJ
normally	ADV
north	NOUN
northern	ADJ
northernly	ADV
norths	NOUN
norwegian	ADJ
not	OTHER
notable	ADJ
notably	ADV
note	NOUN
noted	VERB
notes	NOUN
notice	NOUN
noticed	VERB
notices	NOUN
noticing	VERB
notified	VERB
notifies	VERB
notify	VERB
notifying	VERB
noting	VERB
notion	NOUN
notions	NOUN
notorious	ADJ
notoriously	ADV
novel	NOUN
novels	NOUN
now	OTHER
nowadays	ADV
nuclear	ADJ
nuclearly	ADV
number	NOUN
numbers	NOUN
nurse	NOUN
nurses	NOUN
oases	NOUN
oasis	NOUN
object	NOUN
objective	NOUN
objectives	NOUN
objects	NOUN
obligation	NOUN
obligations	NOUN
observer	NOUN
observers	NOUN
obtain	VERB
obtained	VERB
obtaining	VERB
obtains	VERB
obvious	ADJ
obviously	ADV
occasion	NOUN
occasionally	ADV
occasions	NOUN
occupation	NOUN
occupations	NOUN
occupied	VERB
occupies	VERB
occupy	VERB
occupying	VERB
occur	VERB
occurred	VERB
occurring	VERB
occurs	VERB
ocean	NOUN
oceans	NOUN
odd	ADJ
of	OTHER
off	OTHER
offensive	ADJ
offensively	ADV
offer	NOUN
offered	VERB
offering	VERB
offers	NOUN
office	NOUN
officer	NOUN
officers	NOUN
offices	NOUN
official	NOUN
officially	ADV
officials	NOUN
often	OTHER
oil	NOUN
oils	NOUN
old	ADJ
on	OTHER
once	OTHER
online	ADJ
onlinely	ADV
only	OTHER
onto	OTHER
open	ADJ
opened	VERB
opening	NOUN
openings	NOUN
openly	ADV
opens	VERB
operate	VERB
operated	VERB
operates	VERB
operating	VERB
operation	NOUN
operations	NOUN
opinion	NOUN
opinions	NOUN
opponent	NOUN
opponents	NOUN
opportunities	NOUN
opportunity	NOUN
oppose	VERB
opposed	VERB
opposes	VERB
opposing	VERB
opposite	ADJ
oppositely	ADV
opposition	NOUN
oppositions	NOUN
option	NOUN
options	NOUN
or	OTHER
oral	ADJ
orally	ADV
orange	ADJ
orangely	ADV
order	NOUN
ordered	VERB
ordering	VERB
orders	NOUN
ordinary	ADJ
organic	ADJ
organicly	ADV
organization	NOUN
organizations	NOUN
organize	VERB
organized	VERB
organizes	VERB
organizing	VERB
origin	NOUN
original	ADJ
originally	ADV
origins	NOUN
orthodox	ADJ
orthodoxly	ADV
other	OTHER
otherly	ADV
otherwise	ADV
ought	OTHER
our	OTHER
ours	OTHER
ourselves	OTHER
oust	VERB
ousted	VERB
ousting	VERB
ousts	VERB
out	OTHER
outbreak	NOUN
outbreaks	NOUN
outcome	NOUN
outcomes	NOUN
outdoor	ADJ
outdoorly	ADV
outer	ADJ
outerly	ADV
outlet	NOUN
outlets	NOUN
outline	VERB
outlined	VERB
outlines	VERB
outlining	VERB
output	NOUN
outputs	NOUN
outrage	NOUN
outrages	NOUN
outstanding	ADJ
outstandingly	ADV
over	OTHER
overall	ADJ
overallly	ADV
overcame	VERB
overcome	VERB
overcomes	VERB
overcoming	VERB
overdue	ADJ
overduely	ADV
overhaul	VERB
overhauled	VERB
overhauling	VERB
overhauls	VERB
overseas	ADJ
overseasly	ADV
oversee	VERB
overseed	VERB
oversees	VERB
overseing	VERB
oversight	NOUN
oversights	NOUN
overthrew	VERB
overthrow	VERB
overthrowing	VERB
overthrown	VERB
overthrows	VERB
owe	VERB
owed	VERB
owes	VERB
owing	VERB
own	OTHER
owned	VERB
owner	NOUN
owners	NOUN
owning	VERB
owns	VERB
pace	NOUN
paces	NOUN
package	NOUN
packages	NOUN
pact	NOUN
pacts	NOUN
page	NOUN
pages	NOUN
paid	VERB
pain	NOUN
painful	ADJ
painfully	ADV
pains	NOUN
pakistani	ADJ
pale	ADJ
palestinian	ADJ
paly	ADV
panel	NOUN
panels	NOUN
panic	NOUN
panics	NOUN
paper	NOUN
papers	NOUN
parade	NOUN
parades	NOUN
parallel	ADJ
parallelly	ADV
parent	NOUN
parents	NOUN
park	NOUN
parks	NOUN
parliament	NOUN
parliaments	NOUN
part	NOUN
partial	ADJ
partially	ADV
participant	NOUN
participants	NOUN
participate	VERB
participated	VERB
participates	VERB
participating	VERB
particular	ADJ
particularly	ADV
parties	NOUN
partly	ADV
partner	NOUN
partners	NOUN
partnership	NOUN
partnerships	NOUN
parts	NOUN
party	NOUN
pass	VERB
passage	NOUN
passages	NOUN
passed	VERB
passenger	NOUN
passengers	NOUN
passes	VERB
passing	VERB
passport	NOUN
passports	NOUN
past	NOUN
pastly	ADV
pastor	NOUN
pastors	NOUN
pasts	NOUN
path	NOUN
paths	NOUN
patient	NOUN
patiently	ADV
patients	NOUN
patrol	NOUN
patrols	NOUN
pattern	NOUN
patterns	NOUN
pause	NOUN
paused	VERB
pauses	NOUN
pausing	VERB
pay	VERB
paying	VERB
payment	NOUN
payments	NOUN
pays	VERB
peace	NOUN
peaceful	ADJ
peacefully	ADV
peacekeeper	NOUN
peacekeepers	NOUN
peaces	NOUN
peak	NOUN
peaks	NOUN
peasant	NOUN
peasants	NOUN
pen	NOUN
penalties	NOUN
penalty	NOUN
pending	ADJ
pendingly	ADV
pens	NOUN
pension	NOUN
pensions	NOUN
people	NOUN
peoples	NOUN
per	OTHER
percent	NOUN
percents	NOUN
perfect	ADJ
perfectly	ADV
perform	VERB
performance	NOUN
performances	NOUN
performed	VERB
performing	VERB
performs	VERB
perhaps	ADV
period	NOUN
periods	NOUN
permanent	ADJ
permanently	ADV
permission	NOUN
permissions	NOUN
permit	NOUN
permits	NOUN
permitted	VERB
permitting	VERB
person	NOUN
personal	ADJ
personally	ADV
persuade	VERB
persuaded	VERB
persuades	VERB
persuading	VERB
peruvian	ADJ
petition	NOUN
petitions	NOUN
phase	NOUN
phases	NOUN
phenomena	NOUN
phenomenon	NOUN
phenomenons	NOUN
philosophies	NOUN
philosophy	NOUN
phone	NOUN
phoned	VERB
phones	NOUN
phoning	VERB
photo	NOUN
photograph	NOUN
photographs	NOUN
photos	NOUN
phrase	NOUN
phrases	NOUN
pick	VERB
picked	VERB
picking	VERB
picks	VERB
picture	NOUN
pictures	NOUN
piece	NOUN
pieces	NOUN
pilot	NOUN
pilots	NOUN
pink	ADJ
pinkly	ADV
pipeline	NOUN
pipelines	NOUN
place	NOUN
places	NOUN
plain	ADJ
plainly	ADV
plan	NOUN
plane	NOUN
planes	NOUN
planet	NOUN
planets	NOUN
planned	VERB
planning	VERB
plans	NOUN
plant	NOUN
plants	NOUN
plastic	NOUN
plastics	NOUN
plate	NOUN
plates	NOUN
platform	NOUN
platforms	NOUN
play	VERB
played	VERB
player	NOUN
players	NOUN
playing	VERB
plays	VERB
plaza	NOUN
plazas	NOUN
plead	VERB
pleaded	VERB
pleading	VERB
pleads	VERB
pleasant	ADJ
pleasantly	ADV
pledge	VERB
pledged	VERB
pledges	VERB
pledging	VERB
plot	NOUN
plots	NOUN
poem	NOUN
poems	NOUN
poet	NOUN
poets	NOUN
point	NOUN
pointed	VERB
pointing	VERB
points	NOUN
police	NOUN
polices	NOUN
policies	NOUN
policy	NOUN
polish	ADJ
polite	ADJ
politely	ADV
political	ADJ
politically	ADV
politician	NOUN
politicians	NOUN
politics	NOUN
politicses	NOUN
poll	NOUN
polls	NOUN
pollution	NOUN
pollutions	NOUN
pool	NOUN
pools	NOUN
poor	ADJ
poorly	ADV
popular	ADJ
popularly	ADV
population	NOUN
populations	NOUN
port	NOUN
portion	NOUN
portions	NOUN
portray	VERB
portrayed	VERB
portraying	VERB
portrays	VERB
ports	NOUN
portuguese	ADJ
pose	VERB
posed	VERB
poses	VERB
posing	VERB
position	NOUN
positioned	VERB
positioning	VERB
positions	NOUN
positive	ADJ
positively	ADV
possess	VERB
possessed	VERB
possesses	VERB
possessing	VERB
possibilities	NOUN
possibility	NOUN
possible	ADJ
possibly	ADV
post	NOUN
postal	ADJ
postally	ADV
postpone	VERB
postponed	VERB
postpones	VERB
postponing	VERB
posts	NOUN
potato	NOUN
potatoes	NOUN
potent	ADJ
potential	NOUN
potentially	ADV
potentials	NOUN
potently	ADV
pour	VERB
poured	VERB
pouring	VERB
pours	VERB
poverties	NOUN
poverty	NOUN
power	NOUN
powerful	ADJ
powerfully	ADV
powers	NOUN
practical	ADJ
practically	ADV
practice	NOUN
practices	NOUN
praise	VERB
praised	VERB
praises	VERB
praising	VERB
precedent	NOUN
precedents	NOUN
precise	ADJ
precisely	ADV
predict	VERB
predicted	VERB
predicting	VERB
predicts	VERB
prefer	VERB
preferred	VERB
preferring	VERB
prefers	VERB
pregnant	ADJ
pregnantly	ADV
premature	ADJ
prematurely	ADV
premier	ADJ
premierly	ADV
prepare	VERB
prepared	VERB
prepares	VERB
preparing	VERB
presence	NOUN
presences	NOUN
present	ADJ
presented	VERB
presenting	VERB
presently	ADV
presents	VERB
preserve	VERB
preserved	VERB
preserves	VERB
preserving	VERB
president	NOUN
presidential	ADJ
presidentially	ADV
presidents	NOUN
press	NOUN
pressed	VERB
presses	NOUN
pressing	VERB
pressure	NOUN
pressured	VERB
pressures	NOUN
pressuring	VERB
presumably	ADV
pretty	ADJ
prevent	VERB
prevented	VERB
preventing	VERB
prevents	VERB
previous	ADJ
previously	ADV
price	NOUN
prices	NOUN
pride	NOUN
prides	NOUN
priest	NOUN
priests	NOUN
primarily	ADV
primary	ADJ
prime	ADJ
primely	ADV
prince	NOUN
princes	NOUN
principal	ADJ
principally	ADV
principle	NOUN
principles	NOUN
print	VERB
printed	VERB
printing	VERB
prints	VERB
prior	ADJ
priorities	NOUN
priority	NOUN
priorly	ADV
prison	NOUN
prisoner	NOUN
prisoners	NOUN
prisons	NOUN
privacies	NOUN
privacy	NOUN
private	ADJ
privately	ADV
privilege	NOUN
privileges	NOUN
prize	NOUN
prizes	NOUN
pro	ADJ
probable	ADJ
probably	ADV
probe	NOUN
probes	NOUN
problem	NOUN
problems	NOUN
procedure	NOUN
procedures	NOUN
proceed	VERB
proceeded	VERB
proceeding	VERB
proceeds	VERB
process	NOUN
processed	VERB
processes	NOUN
processing	VERB
produce	VERB
produced	VERB
producer	NOUN
producers	NOUN
produces	VERB
producing	VERB
product	NOUN
production	NOUN
productions	NOUN
products	NOUN
profession	NOUN
professional	ADJ
professionally	ADV
professions	NOUN
professor	NOUN
professors	NOUN
profile	NOUN
profiles	NOUN
profit	NOUN
profits	NOUN
profound	ADJ
profoundly	ADV
program	NOUN
programs	NOUN
progress	NOUN
progresses	NOUN
prohibit	VERB
prohibited	VERB
prohibiting	VERB
prohibits	VERB
project	NOUN
projects	NOUN
prominent	ADJ
prominently	ADV
promise	NOUN
promised	VERB
promises	NOUN
promising	VERB
promote	VERB
promoted	VERB
promotes	VERB
promoting	VERB
prompt	ADJ
prompted	VERB
prompting	VERB
promptly	ADV
prompts	VERB
prone	ADJ
pronely	ADV
proof	NOUN
proofs	NOUN
propaganda	NOUN
propagandas	NOUN
proper	ADJ
properly	ADV
properties	NOUN
property	NOUN
proposal	NOUN
proposals	NOUN
propose	VERB
proposed	VERB
proposes	VERB
proposing	VERB
prosecute	VERB
prosecuted	VERB
prosecutes	VERB
prosecuting	VERB
prosecutor	NOUN
prosecutors	NOUN
prospect	NOUN
prospects	NOUN
protect	VERB
protected	VERB
protecting	VERB
protection	NOUN
protections	NOUN
protects	VERB
protest	NOUN
protested	VERB
protester	NOUN
protesters	NOUN
protesting	VERB
protests	NOUN
proud	ADJ
proudly	ADV
prove	VERB
proved	VERB
proven	VERB
proves	VERB
provide	VERB
provided	VERB
provides	VERB
providing	VERB
province	NOUN
provinces	NOUN
provincial	ADJ
provincially	ADV
proving	VERB
provision	NOUN
provisions	NOUN
provoke	VERB
provoked	VERB
provokes	VERB
provoking	VERB
public	NOUN
publicly	ADV
publics	NOUN
publish	VERB
published	VERB
publishes	VERB
publishing	VERB
pull	VERB
pulled	VERB
pulling	VERB
pulls	VERB
punish	VERB
punished	VERB
punishes	VERB
punishing	VERB
punitive	ADJ
punitively	ADV
purchase	VERB
purchased	VERB
purchases	VERB
purchasing	VERB
pure	ADJ
purely	ADV
purple	ADJ
purply	ADV
purpose	NOUN
purposes	NOUN
pursue	VERB
pursued	VERB
pursues	VERB
pursuing	VERB
push	VERB
pushed	VERB
pushes	VERB
pushing	VERB
put	VERB
puts	VERB
putting	VERB
qualified	VERB
qualifies	VERB
qualify	VERB
qualifying	VERB
qualities	NOUN
quality	NOUN
quarter	NOUN
quarters	NOUN
queen	NOUN
queens	NOUN
question	NOUN
questioned	VERB
questioning	VERB
questions	NOUN
quick	ADJ
quickly	ADV
quiet	ADJ
quietly	ADV
quit	VERB
quite	ADV
quited	VERB
quiting	VERB
quits	VERB
quote	VERB
quoted	VERB
quotes	VERB
quoting	VERB
radar	NOUN
radars	NOUN
radical	ADJ
radically	ADV
radio	NOUN
radios	NOUN
raid	NOUN
raided	VERB
raiding	VERB
raids	NOUN
rail	NOUN
rails	NOUN
railway	NOUN
railways	NOUN
rain	NOUN
rains	NOUN
raise	NOUN
raised	VERB
raises	NOUN
raising	VERB
rallied	VERB
rallies	NOUN
rally	NOUN
rallying	VERB
ran	VERB
rang	VERB
range	NOUN
ranged	VERB
ranges	NOUN
ranging	VERB
rank	NOUN
ranked	VERB
ranking	VERB
ranks	NOUN
ransom	NOUN
ransoms	NOUN
rapid	ADJ
rapidly	ADV
rare	ADJ
rarely	ADV
rate	NOUN
rates	NOUN
rather	ADV
ratio	NOUN
ratios	NOUN
raw	ADJ
reach	VERB
reached	VERB
reaches	VERB
reaching	VERB
react	VERB
reacted	VERB
reacting	VERB
reaction	NOUN
reactions	NOUN
reacts	VERB
read	VERB
reader	NOUN
readers	NOUN
reading	VERB
reads	VERB
ready	ADJ
real	ADJ
realities	NOUN
reality	NOUN
realize	VERB
realized	VERB
realizes	VERB
realizing	VERB
really	ADV
rear	ADJ
rearly	ADV
reason	NOUN
reasons	NOUN
reassure	VERB
reassured	VERB
reassures	VERB
reassuring	VERB
rebel	NOUN
rebellion	NOUN
rebellions	NOUN
rebels	NOUN
rebuild	VERB
rebuilded	VERB
rebuilding	VERB
rebuilds	VERB
recall	VERB
recalled	VERB
recalling	VERB
recalls	VERB
receive	VERB
received	VERB
receives	VERB
receiving	VERB
recent	ADJ
recently	ADV
recession	NOUN
recessions	NOUN
recognition	NOUN
recognitions	NOUN
recognize	VERB
recognized	VERB
recognizes	VERB
recognizing	VERB
recommend	VERB
recommended	VERB
recommending	VERB
recommends	VERB
record	NOUN
recorded	VERB
recording	VERB
records	NOUN
recover	VERB
recovered	VERB
recoveries	NOUN
recovering	VERB
recovers	VERB
recovery	NOUN
recruit	VERB
recruited	VERB
recruiting	VERB
recruits	VERB
red	ADJ
reduce	VERB
reduced	VERB
reduces	VERB
reducing	VERB
refer	VERB
referendum	NOUN
referendums	NOUN
referred	VERB
referring	VERB
refers	VERB
reflect	VERB
reflected	VERB
reflecting	VERB
reflects	VERB
reform	NOUN
reforms	NOUN
refugee	NOUN
refugees	NOUN
refuse	VERB
refused	VERB
refuses	VERB
refusing	VERB
regain	VERB
regained	VERB
regaining	VERB
regains	VERB
regard	VERB
regarded	VERB
regarding	VERB
regardless	ADV
regards	VERB
regime	NOUN
regimes	NOUN
region	NOUN
regional	ADJ
regionally	ADV
regions	NOUN
register	NOUN
registered	VERB
registering	VERB
registers	NOUN
regret	VERB
regrets	VERB
regretted	VERB
regretting	VERB
regular	ADJ
regularly	ADV
regulate	VERB
regulated	VERB
regulates	VERB
regulating	VERB
regulation	NOUN
regulations	NOUN
regulator	NOUN
regulators	NOUN
reiterate	VERB
reiterated	VERB
reiterates	VERB
reiterating	VERB
reject	VERB
rejected	VERB
rejecting	VERB
rejects	VERB
relate	VERB
related	VERB
relates	VERB
relating	VERB
relation	NOUN
relations	NOUN
relationship	NOUN
relationships	NOUN
relatively	ADV
release	NOUN
released	VERB
releases	NOUN
releasing	VERB
relevant	ADJ
relevantly	ADV
relied	VERB
relief	NOUN
reliefs	NOUN
relies	VERB
religion	NOUN
religions	NOUN
relocate	VERB
relocated	VERB
relocates	VERB
relocating	VERB
reluctant	ADJ
reluctantly	ADV
rely	VERB
relying	VERB
remain	VERB
remained	VERB
remaining	VERB
remains	VERB
remark	VERB
remarked	VERB
remarking	VERB
remarks	VERB
remember	VERB
remembered	VERB
remembering	VERB
remembers	VERB
remind	VERB
reminded	VERB
reminding	VERB
reminds	VERB
remote	ADJ
remotely	ADV
remove	VERB
removed	VERB
removes	VERB
removing	VERB
renew	VERB
renewable	ADJ
renewably	ADV
renewed	VERB
renewing	VERB
renews	VERB
reopen	VERB
reopened	VERB
reopening	VERB
reopens	VERB
repair	VERB
repaired	VERB
repairing	VERB
repairs	VERB
repeat	VERB
repeated	ADJ
repeatedly	ADV
repeating	VERB
repeats	VERB
replace	VERB
replaced	VERB
replaces	VERB
replacing	VERB
replied	VERB
replies	VERB
reply	VERB
replying	VERB
report	NOUN
reported	VERB
reportedly	ADV
reporter	NOUN
reporters	NOUN
reporting	VERB
reports	NOUN
represent	VERB
represented	VERB
representing	VERB
represents	VERB
republic	NOUN
republics	NOUN
reputation	NOUN
reputations	NOUN
request	NOUN
requested	VERB
requesting	VERB
requests	NOUN
require	VERB
required	VERB
requirement	NOUN
requirements	NOUN
requires	VERB
requiring	VERB
rescue	NOUN
rescued	VERB
rescues	NOUN
rescuing	VERB
research	NOUN
researcher	NOUN
researchers	NOUN
researches	NOUN
reserve	NOUN
reserves	NOUN
residence	NOUN
residences	NOUN
resident	NOUN
residential	ADJ
residentially	ADV
residents	NOUN
resign	VERB
resignation	NOUN
resignations	NOUN
resigned	VERB
resigning	VERB
resigns	VERB
resist	VERB
resistance	NOUN
resistances	NOUN
resisted	VERB
resisting	VERB
resists	VERB
resolution	NOUN
resolutions	NOUN
resolve	VERB
resolved	VERB
resolves	VERB
resolving	VERB
resort	NOUN
resorts	NOUN
resource	NOUN
resources	NOUN
respect	NOUN
respected	VERB
respecting	VERB
respects	NOUN
respond	VERB
responded	VERB
responding	VERB
responds	VERB
response	NOUN
responses	NOUN
responsibilities	NOUN
responsibility	NOUN
responsible	ADJ
responsibly	ADV
rest	NOUN
restaurant	NOUN
restaurants	NOUN
restore	VERB
restored	VERB
restores	VERB
restoring	VERB
restrict	VERB
restricted	VERB
restricting	VERB
restricts	VERB
rests	NOUN
result	NOUN
resulted	VERB
resulting	VERB
results	NOUN
resume	VERB
resumed	VERB
resumes	VERB
resuming	VERB
retail	ADJ
retailly	ADV
retain	VERB
retained	VERB
retaining	VERB
retains	VERB
retaliate	VERB
retaliated	VERB
retaliates	VERB
retaliating	VERB
retire	VERB
retired	VERB
retires	VERB
retiring	VERB
retreat	NOUN
retreated	VERB
retreating	VERB
retreats	NOUN
return	NOUN
returned	VERB
returning	VERB
returns	NOUN
reveal	VERB
revealed	VERB
revealing	VERB
reveals	VERB
revenge	NOUN
revenges	NOUN
revenue	NOUN
revenues	NOUN
review	NOUN
reviewed	VERB
reviewing	VERB
reviews	NOUN
revise	VERB
revised	VERB
revises	VERB
revising	VERB
revive	VERB
revived	VERB
revives	VERB
reviving	VERB
revolution	NOUN
revolutions	NOUN
reward	NOUN
rewarded	VERB
rewarding	VERB
rewards	NOUN
rhetoric	NOUN
rhetorics	NOUN
rice	NOUN
rices	NOUN
rich	ADJ
richly	ADV
ridden	VERB
ride	NOUN
rides	NOUN
riding	VERB
rifle	NOUN
rifles	NOUN
right	NOUN
rightly	ADV
rights	NOUN
rigid	ADJ
rigidly	ADV
ring	NOUN
ringing	VERB
rings	NOUN
riot	NOUN
riots	NOUN
ripe	ADJ
ripely	ADV
rise	NOUN
risen	VERB
rises	NOUN
rising	VERB
risk	NOUN
risks	NOUN
rival	NOUN
rivally	ADV
rivals	NOUN
river	NOUN
rivers	NOUN
road	NOUN
roads	NOUN
robust	ADJ
robustly	ADV
rock	NOUN
rocket	NOUN
rockets	NOUN
rocks	NOUN
rode	VERB
rogue	ADJ
roguely	ADV
role	NOUN
roles	NOUN
romanian	ADJ
roof	NOUN
roofs	NOUN
room	NOUN
rooms	NOUN
root	NOUN
roots	NOUN
rose	VERB
rotation	NOUN
rotations	NOUN
rough	ADJ
roughly	ADV
round	NOUN
roundly	ADV
rounds	NOUN
route	NOUN
routes	NOUN
routine	NOUN
routines	NOUN
royal	ADJ
royally	ADV
rule	NOUN
ruled	VERB
rules	NOUN
ruling	NOUN
rulings	NOUN
rumor	NOUN
rumors	NOUN
run	NOUN
rung	VERB
running	VERB
runs	NOUN
rural	ADJ
rurally	ADV
rush	VERB
rushed	VERB
rushes	VERB
rushing	VERB
russian	ADJ
rwandan	ADJ
sabotage	NOUN
sabotages	NOUN
sacred	ADJ
sacredly	ADV
sad	ADJ
safe	ADJ
safely	ADV
safeties	NOUN
safety	NOUN
said	VERB
sale	NOUN
sales	NOUN
salient	ADJ
saliently	ADV
same	OTHER
samely	ADV
sample	NOUN
samples	NOUN
sanction	NOUN
sanctioned	VERB
sanctioning	VERB
sanctions	NOUN
sand	NOUN
sands	NOUN
sang	VERB
sank	VERB
sat	VERB
satellite	NOUN
satellites	NOUN
saudi	ADJ
save	VERB
saved	VERB
saves	VERB
saving	VERB
saw	VERB
say	VERB
saying	VERB
says	VERB
scale	NOUN
scales	NOUN
scan	VERB
scandal	NOUN
scandals	NOUN
scaned	VERB
scaning	VERB
scans	VERB
scenario	NOUN
scenarios	NOUN
scene	NOUN
scenes	NOUN
schedule	NOUN
scheduled	VERB
schedules	NOUN
scheduling	VERB
scheme	NOUN
schemes	NOUN
scholar	NOUN
scholars	NOUN
school	NOUN
schools	NOUN
science	NOUN
sciences	NOUN
scientist	NOUN
scientists	NOUN
score	NOUN
scored	VERB
scores	NOUN
scoring	VERB
scottish	ADJ
sea	NOUN
seal	VERB
sealed	VERB
sealing	VERB
seals	VERB
search	NOUN
searched	VERB
searches	NOUN
searching	VERB
seas	NOUN
season	NOUN
seasons	NOUN
seat	NOUN
seats	NOUN
second	NOUN
seconds	NOUN
secret	NOUN
secretaries	NOUN
secretary	NOUN
secretly	ADV
secrets	NOUN
section	NOUN
sections	NOUN
sector	NOUN
sectors	NOUN
secular	ADJ
secularly	ADV
secure	ADJ
secured	VERB
securely	ADV
secures	VERB
securing	VERB
securities	NOUN
security	NOUN
see	VERB
seeing	VERB
seek	VERB
seeking	VERB
seeks	VERB
seem	VERB
seemed	VERB
seeming	VERB
seems	VERB
seen	VERB
sees	VERB
seize	VERB
seized	VERB
seizes	VERB
seizing	VERB
seizure	NOUN
seizures	NOUN
selection	NOUN
selections	NOUN
self	NOUN
sell	VERB
selling	VERB
sells	VERB
selves	NOUN
senate	NOUN
senates	NOUN
senator	NOUN
senators	NOUN
send	VERB
sending	VERB
sends	VERB
senior	ADJ
seniorly	ADV
sense	NOUN
senses	NOUN
sensitive	ADJ
sensitively	ADV
sent	VERB
sentence	NOUN
sentenced	VERB
sentences	NOUN
sentencing	VERB
separate	ADJ
separated	VERB
separately	ADV
separates	VERB
separating	VERB
serbian	ADJ
sergeant	NOUN
sergeants	NOUN
series	NOUN
serieses	NOUN
serious	ADJ
seriously	ADV
serve	VERB
served	VERB
serves	VERB
service	NOUN
services	NOUN
serving	VERB
session	NOUN
sessions	NOUN
set	VERB
sets	VERB
setting	VERB
settle	VERB
settled	VERB
settlement	NOUN
settlements	NOUN
settles	VERB
settling	VERB
severe	ADJ
severely	ADV
shake	VERB
shaken	VERB
shakes	VERB
shaking	VERB
shall	OTHER
shallow	ADJ
shallowly	ADV
shape	NOUN
shapes	NOUN
share	NOUN
shared	VERB
shares	NOUN
sharing	VERB
sharp	ADJ
sharply	ADV
she	OTHER
sheep	NOUN
sheer	ADJ
sheerly	ADV
shelf	NOUN
shell	NOUN
shelled	VERB
shelling	VERB
shells	NOUN
shelter	NOUN
shelters	NOUN
shelves	NOUN
shift	VERB
shifted	VERB
shifting	VERB
shifts	VERB
shine	VERB
shines	VERB
shining	VERB
ship	NOUN
shipment	NOUN
shipments	NOUN
ships	NOUN
shock	NOUN
shocked	VERB
shocking	VERB
shocks	NOUN
shoe	NOUN
shoes	NOUN
shone	VERB
shook	VERB
shoot	VERB
shooting	NOUN
shootings	NOUN
shoots	VERB
shop	NOUN
shops	NOUN
shore	NOUN
shores	NOUN
short	ADJ
shortage	NOUN
shortages	NOUN
shortly	ADV
shot	NOUN
shots	NOUN
should	OTHER
shoulder	NOUN
shoulders	NOUN
shouldn	OTHER
shout	VERB
shouted	VERB
shouting	VERB
shouts	VERB
show	NOUN
showed	VERB
showing	VERB
shown	VERB
shows	NOUN
shrank	VERB
shrink	VERB
shrinking	VERB
shrinks	VERB
shrunk	VERB
shut	VERB
shuts	VERB
shutting	VERB
shy	ADJ
siberian	ADJ
sick	ADJ
sickly	ADV
side	NOUN
sides	NOUN
siege	NOUN
sieges	NOUN
sight	NOUN
sights	NOUN
sign	NOUN
signal	NOUN
signaled	VERB
signaling	VERB
signals	NOUN
signature	NOUN
signatures	NOUN
signed	VERB
significant	ADJ
significantly	ADV
signing	VERB
signs	NOUN
silence	NOUN
silences	NOUN
silent	ADJ
silently	ADV
silly	ADJ
similar	ADJ
similarly	ADV
simple	ADJ
simply	ADV
since	OTHER
sincere	ADJ
sincerely	ADV
sing	VERB
singer	NOUN
singers	NOUN
singing	VERB
single	ADJ
singly	ADV
sings	VERB
sink	VERB
sinking	VERB
sinks	VERB
sister	NOUN
sisters	NOUN
sit	VERB
site	NOUN
sites	NOUN
sits	VERB
sitting	VERB
situation	NOUN
situations	NOUN
size	NOUN
sizes	NOUN
skies	NOUN
skill	NOUN
skills	NOUN
sky	NOUN
slam	VERB
slammed	VERB
slamming	VERB
slams	VERB
sleep	VERB
sleeping	VERB
sleeps	VERB
slept	VERB
slid	VERB
slide	VERB
slides	VERB
sliding	VERB
slight	ADJ
slightly	ADV
slogan	NOUN
slogans	NOUN
slovak	ADJ
slovenian	ADJ
slow	ADJ
slowly	ADV
small	ADJ
smallly	ADV
smart	ADJ
smartly	ADV
smash	VERB
smashed	VERB
smashes	VERB
smashing	VERB
smile	VERB
smiled	VERB
smiles	VERB
smiling	VERB
smoke	NOUN
smokes	NOUN
smooth	ADJ
smoothly	ADV
snow	NOUN
snows	NOUN
so	OTHER
social	ADJ
socially	ADV
societies	NOUN
society	NOUN
soft	ADJ
softly	ADV
software	NOUN
softwares	NOUN
soil	NOUN
soils	NOUN
sold	VERB
soldier	NOUN
soldiers	NOUN
sole	ADJ
solid	ADJ
solidly	ADV
solution	NOUN
solutions	NOUN
soly	ADV
somali	ADJ
some	OTHER
somehow	ADV
sometime	ADV
sometimes	OTHER
somewhat	ADV
son	NOUN
song	NOUN
songs	NOUN
sons	NOUN
soon	ADV
sore	ADJ
sorely	ADV
sorry	ADJ
sort	NOUN
sorts	NOUN
sought	VERB
sound	ADJ
sounded	VERB
sounding	VERB
soundly	ADV
sounds	VERB
source	NOUN
sources	NOUN
south	NOUN
southern	ADJ
southernly	ADV
souths	NOUN
sovereign	ADJ
sovereignly	ADV
space	NOUN
spaces	NOUN
spanish	ADJ
spare	ADJ
sparely	ADV
spark	VERB
sparked	VERB
sparking	VERB
sparks	VERB
speak	VERB
speaker	NOUN
speakers	NOUN
speaking	VERB
speaks	VERB
special	ADJ
specially	ADV
species	NOUN
specific	ADJ
specifically	ADV
specificly	ADV
speech	NOUN
speeches	NOUN
speed	NOUN
speeds	NOUN
spend	VERB
spending	NOUN
spendings	NOUN
spends	VERB
spent	VERB
sphere	NOUN
spheres	NOUN
spin	VERB
spinning	VERB
spins	VERB
spirit	NOUN
spirits	NOUN
spoke	VERB
spoken	VERB
spokesman	NOUN
spokesmans	NOUN
spokesperson	NOUN
spokespersons	NOUN
spokeswoman	NOUN
spokeswomans	NOUN
sponsor	VERB
sponsored	VERB
sponsoring	VERB
sponsors	VERB
sport	NOUN
sports	NOUN
spot	NOUN
spots	NOUN
spread	VERB
spreading	VERB
spreads	VERB
spring	NOUN
springs	NOUN
spun	VERB
spur	VERB
spurred	VERB
spurring	VERB
spurs	VERB
square	NOUN
squares	NOUN
stabilities	NOUN
stability	NOUN
stabilize	VERB
stabilized	VERB
stabilizes	VERB
stabilizing	VERB
stable	ADJ
stably	ADV
stadium	NOUN
stadiums	NOUN
staff	NOUN
stage	NOUN
staged	VERB
stages	NOUN
staging	VERB
stake	NOUN
stakes	NOUN
stand	VERB
standard	NOUN
standards	NOUN
standing	VERB
standoff	NOUN
standoffs	NOUN
stands	VERB
star	NOUN
stark	ADJ
starkly	ADV
stars	NOUN
start	NOUN
started	VERB
starting	VERB
starts	NOUN
starve	VERB
starved	VERB
starves	VERB
starving	VERB
state	NOUN
stated	VERB
statement	NOUN
statements	NOUN
states	NOUN
stating	VERB
station	NOUN
stations	NOUN
statistic	NOUN
statistics	NOUN
status	NOUN
statuses	NOUN
stay	VERB
stayed	VERB
staying	VERB
stays	VERB
steadily	ADV
steady	ADJ
steal	VERB
stealing	VERB
steals	VERB
steel	NOUN
steels	NOUN
steep	ADJ
steeply	ADV
stem	VERB
stemmed	VERB
stemming	VERB
stems	VERB
step	NOUN
stepped	VERB
stepping	VERB
steps	NOUN
sterile	ADJ
sterily	ADV
stick	VERB
sticking	VERB
sticks	VERB
stiff	ADJ
stiffly	ADV
still	OTHER
stillly	ADV
sting	VERB
stinging	VERB
stings	VERB
stock	NOUN
stocks	NOUN
stole	VERB
stolen	VERB
stone	NOUN
stones	NOUN
stood	VERB
stop	VERB
stopped	VERB
stopping	VERB
stops	VERB
store	NOUN
stores	NOUN
stories	NOUN
storm	NOUN
stormed	VERB
storming	VERB
storms	NOUN
story	NOUN
straight	ADJ
straightly	ADV
strain	VERB
strained	VERB
straining	VERB
strains	VERB
strange	ADJ
strangely	ADV
strategic	ADJ
strategicly	ADV
strategies	NOUN
strategy	NOUN
stream	NOUN
streams	NOUN
street	NOUN
streets	NOUN
strength	NOUN
strengthen	VERB
strengthened	VERB
strengthening	VERB
strengthens	VERB
strengths	NOUN
stress	NOUN
stressed	VERB
stresses	NOUN
stressing	VERB
stretch	VERB
stretched	VERB
stretches	VERB
stretching	VERB
strict	ADJ
strictly	ADV
strike	NOUN
strikes	NOUN
striking	VERB
strong	ADJ
strongly	ADV
struck	VERB
structure	NOUN
structures	NOUN
struggle	NOUN
struggled	VERB
struggles	NOUN
struggling	VERB
stubborn	ADJ
stubbornly	ADV
stuck	VERB
student	NOUN
students	NOUN
studied	VERB
studies	NOUN
study	NOUN
studying	VERB
stung	VERB
style	NOUN
styles	NOUN
subject	NOUN
subjects	NOUN
submarine	NOUN
submarines	NOUN
submit	VERB
submits	VERB
submitted	VERB
submitting	VERB
subsequent	ADJ
subsequently	ADV
subsidies	NOUN
subsidy	NOUN
substantially	ADV
subtle	ADJ
subtly	ADV
suburb	NOUN
suburbs	NOUN
subway	NOUN
subways	NOUN
succeed	VERB
succeeded	VERB
succeeding	VERB
succeeds	VERB
success	NOUN
successes	NOUN
successfully	ADV
such	OTHER
sudanese	ADJ
sudden	ADJ
suddenly	ADV
suffer	VERB
suffered	VERB
suffering	VERB
suffers	VERB
sufficient	ADJ
sufficiently	ADV
suggest	VERB
suggested	VERB
suggesting	VERB
suggests	VERB
suitable	ADJ
suitably	ADV
summer	NOUN
summers	NOUN
summit	NOUN
summits	NOUN
summon	VERB
summoned	VERB
summoning	VERB
summons	VERB
sun	NOUN
sung	VERB
sunk	VERB
sunny	ADJ
suns	NOUN
super	ADJ
superb	ADJ
superbly	ADV
superior	ADJ
superiorly	ADV
superly	ADV
supplied	VERB
supplies	NOUN
supply	NOUN
supplying	VERB
support	NOUN
supported	VERB
supporter	NOUN
supporters	NOUN
supporting	VERB
supports	NOUN
supposedly	ADV
suppress	VERB
suppressed	VERB
suppresses	VERB
suppressing	VERB
supreme	ADJ
supremely	ADV
sure	ADJ
surely	ADV
surface	NOUN
surfaces	NOUN
surge	NOUN
surged	VERB
surges	NOUN
surging	VERB
surplus	NOUN
surpluses	NOUN
surprise	NOUN
surprises	NOUN
surprisingly	ADV
surround	VERB
surrounded	VERB
surrounding	VERB
surrounds	VERB
surveillance	NOUN
surveillances	NOUN
survey	NOUN
surveys	NOUN
survive	VERB
survived	VERB
survives	VERB
surviving	VERB
survivor	NOUN
survivors	NOUN
suspect	NOUN
suspected	VERB
suspecting	VERB
suspects	NOUN
suspend	VERB
suspended	VERB
suspending	VERB
suspends	VERB
suspension	NOUN
suspensions	NOUN
suspicious	ADJ
suspiciously	ADV
sustain	VERB
sustained	VERB
sustaining	VERB
sustains	VERB
swam	VERB
swear	VERB
swearing	VERB
swears	VERB
swedish	ADJ
sweep	VERB
sweeping	VERB
sweeps	VERB
sweet	ADJ
sweetly	ADV
swept	VERB
swift	ADJ
swiftly	ADV
swim	VERB
swimming	VERB
swims	VERB
swing	VERB
swinging	VERB
swings	VERB
swiss	ADJ
swore	VERB
sworn	VERB
swum	VERB
swung	VERB
symbol	NOUN
symbols	NOUN
sympathies	NOUN
sympathy	NOUN
symptom	NOUN
symptoms	NOUN
syrian	ADJ
system	NOUN
systems	NOUN
table	NOUN
tables	NOUN
tactic	NOUN
tactical	ADJ
tactically	ADV
tactics	NOUN
tail	NOUN
tails	NOUN
taiwanese	ADJ
take	VERB
taken	VERB
takes	VERB
taking	VERB
talk	NOUN
talked	VERB
talking	VERB
talks	NOUN
tall	ADJ
tallly	ADV
tank	NOUN
tanks	NOUN
target	NOUN
targeted	VERB
targeting	VERB
targets	NOUN
tariff	NOUN
tariffs	NOUN
task	NOUN
tasks	NOUN
taught	VERB
tax	NOUN
taxed	VERB
taxes	NOUN
taxi	NOUN
taxing	VERB
taxis	NOUN
tea	NOUN
teach	VERB
teacher	NOUN
teachers	NOUN
teaches	VERB
teaching	VERB
team	NOUN
teams	NOUN
tear	VERB
tearing	VERB
tears	VERB
teas	NOUN
technical	ADJ
technically	ADV
technologies	NOUN
technology	NOUN
teen	NOUN
teens	NOUN
teeth	NOUN
telephone	NOUN
telephones	NOUN
television	NOUN
televisions	NOUN
tell	VERB
telling	VERB
tells	VERB
temperature	NOUN
temperatures	NOUN
temple	NOUN
temples	NOUN
temporary	ADJ
tender	ADJ
tenderly	ADV
tense	ADJ
tensely	ADV
tension	NOUN
tensions	NOUN
tent	NOUN
tents	NOUN
term	NOUN
terminal	NOUN
terminals	NOUN
terminate	VERB
terminated	VERB
terminates	VERB
terminating	VERB
terms	NOUN
terrible	ADJ
terribly	ADV
territories	NOUN
territory	NOUN
terror	NOUN
terrorism	NOUN
terrorisms	NOUN
terrorist	NOUN
terrorists	NOUN
terrors	NOUN
test	NOUN
tested	VERB
testified	VERB
testifies	VERB
testify	VERB
testifying	VERB
testimonies	NOUN
testimony	NOUN
testing	VERB
tests	NOUN
text	NOUN
texts	NOUN
thai	ADJ
than	OTHER
thank	VERB
thanked	VERB
thanking	VERB
thanks	VERB
that	OTHER
the	OTHER
theater	NOUN
theaters	NOUN
their	OTHER
theirs	OTHER
them	OTHER
theme	NOUN
themes	NOUN
themselves	OTHER
then	OTHER
theories	NOUN
theory	NOUN
therapies	NOUN
therapy	NOUN
there	OTHER
therefore	OTHER
these	OTHER
theses	NOUN
thesis	NOUN
they	OTHER
thick	ADJ
thickly	ADV
thief	NOUN
thieves	NOUN
thin	ADJ
thing	NOUN
things	NOUN
think	VERB
thinking	VERB
thinks	VERB
thinly	ADV
third	ADJ
thirdly	ADV
this	OTHER
thorough	ADJ
thoroughly	ADV
those	OTHER
though	OTHER
thought	NOUN
thoughts	NOUN
threat	NOUN
threaten	VERB
threatened	VERB
threatening	VERB
threatens	VERB
threats	NOUN
threw	VERB
throne	NOUN
thrones	NOUN
through	OTHER
throw	VERB
throwing	VERB
thrown	VERB
throws	VERB
thus	OTHER
ticket	NOUN
tickets	NOUN
tide	NOUN
tides	NOUN
tight	ADJ
tighten	VERB
tightened	VERB
tightening	VERB
tightens	VERB
tightly	ADV
time	NOUN
timed	VERB
times	NOUN
timing	VERB
tiny	ADJ
tip	NOUN
tips	NOUN
tired	ADJ
tiredly	ADV
tissue	NOUN
tissues	NOUN
title	NOUN
titles	NOUN
to	OTHER
today	NOUN
todays	NOUN
toe	NOUN
toes	NOUN
together	ADV
told	VERB
tomato	NOUN
tomatoes	NOUN
tomorrow	ADV
ton	NOUN
tone	NOUN
tones	NOUN
tonight	ADV
tons	NOUN
too	OTHER
took	VERB
tool	NOUN
tools	NOUN
tooth	NOUN
top	NOUN
topic	NOUN
topics	NOUN
topped	VERB
topping	VERB
topple	VERB
toppled	VERB
topples	VERB
toppling	VERB
tops	NOUN
tore	VERB
torn	VERB
tornado	NOUN
tornados	NOUN
torpedo	NOUN
torpedoes	NOUN
torture	VERB
tortured	VERB
tortures	VERB
torturing	VERB
total	NOUN
totaled	VERB
totaling	VERB
totally	ADV
totals	NOUN
touch	VERB
touched	VERB
touches	VERB
touching	VERB
tough	ADJ
toughly	ADV
tour	NOUN
toured	VERB
touring	VERB
tourism	NOUN
tourisms	NOUN
tourist	NOUN
tourists	NOUN
tours	NOUN
toward	OTHER
towards	OTHER
tower	NOUN
towers	NOUN
town	NOUN
towns	NOUN
toxic	ADJ
toxicly	ADV
trace	NOUN
traces	NOUN
track	NOUN
tracked	VERB
tracking	VERB
tracks	NOUN
trade	NOUN
traded	VERB
trades	NOUN
trading	VERB
tradition	NOUN
traditional	ADJ
traditionally	ADV
traditions	NOUN
traffic	NOUN
traffics	NOUN
tragedies	NOUN
tragedy	NOUN
tragic	ADJ
tragicly	ADV
trail	NOUN
trails	NOUN
train	NOUN
trained	VERB
training	NOUN
trainings	NOUN
trains	NOUN
transaction	NOUN
transactions	NOUN
transcript	NOUN
transcripts	NOUN
transfer	VERB
transferred	VERB
transferring	VERB
transfers	VERB
transform	VERB
transformed	VERB
transforming	VERB
transforms	VERB
transit	NOUN
transition	NOUN
transitions	NOUN
transits	NOUN
translate	VERB
translated	VERB
translates	VERB
translating	VERB
transparent	ADJ
transparently	ADV
transport	NOUN
transportation	NOUN
transportations	NOUN
transported	VERB
transporting	VERB
transports	NOUN
trauma	NOUN
traumas	NOUN
travel	NOUN
traveled	VERB
traveling	VERB
travels	NOUN
treasuries	NOUN
treasury	NOUN
treat	VERB
treated	VERB
treaties	NOUN
treating	VERB
treatment	NOUN
treatments	NOUN
treats	VERB
treaty	NOUN
tremendous	ADJ
tremendously	ADV
trend	NOUN
trends	NOUN
trial	NOUN
trials	NOUN
tribal	ADJ
tribally	ADV
tribe	NOUN
tribes	NOUN
tribunal	NOUN
tribunals	NOUN
tricky	ADJ
tried	VERB
tries	VERB
trigger	VERB
triggered	VERB
triggering	VERB
triggers	VERB
trip	NOUN
trips	NOUN
troop	NOUN
troops	NOUN
tropical	ADJ
tropically	ADV
trouble	NOUN
troubles	NOUN
truce	NOUN
truces	NOUN
truck	NOUN
trucks	NOUN
true	ADJ
truely	ADV
truly	ADV
trust	NOUN
trusted	VERB
trusting	VERB
trusts	NOUN
truth	NOUN
truths	NOUN
try	VERB
trying	VERB
tunisian	ADJ
tunnel	NOUN
tunnels	NOUN
turbulent	ADJ
turbulently	ADV
turkish	ADJ
turn	NOUN
turned	VERB
turning	VERB
turnout	NOUN
turnouts	NOUN
turns	NOUN
twice	ADV
type	NOUN
types	NOUN
typically	ADV
ugandan	ADJ
ugly	ADJ
ukrainian	ADJ
ultimate	ADJ
ultimately	ADV
unable	ADJ
unably	ADV
uncertainties	NOUN
uncertainty	NOUN
under	OTHER
undergo	VERB
undergoes	VERB
undergoing	VERB
undergone	VERB
underground	ADJ
undergroundly	ADV
undermine	VERB
undermined	VERB
undermines	VERB
undermining	VERB
understand	VERB
understanding	VERB
understands	VERB
understood	VERB
undertake	VERB
undertaken	VERB
undertakes	VERB
undertaking	VERB
undertook	VERB
underwent	VERB
undoubtedly	ADV
uneasy	ADJ
unfair	ADJ
unfairly	ADV
unfold	VERB
unfolded	VERB
unfolding	VERB
unfolds	VERB
unfortunately	ADV
unified	VERB
unifies	VERB
uniform	NOUN
uniforms	NOUN
unify	VERB
unifying	VERB
union	NOUN
unions	NOUN
unique	ADJ
uniquely	ADV
unit	NOUN
unite	VERB
united	VERB
unites	VERB
unities	NOUN
uniting	VERB
units	NOUN
unity	NOUN
universal	ADJ
universally	ADV
universities	NOUN
university	NOUN
unlawful	ADJ
unlawfully	ADV
unless	OTHER
unlikely	ADJ
unprecedented	ADJ
unprecedentedly	ADV
until	OTHER
unusual	ADJ
unusually	ADV
unveil	VERB
unveiled	VERB
unveiling	VERB
unveils	VERB
up	OTHER
upcoming	ADJ
upcomingly	ADV
update	VERB
updated	VERB
updates	VERB
updating	VERB
upgrade	VERB
upgraded	VERB
upgrades	VERB
upgrading	VERB
upheld	VERB
uphold	VERB
upholding	VERB
upholds	VERB
upon	OTHER
upper	ADJ
upperly	ADV
uprising	NOUN
uprisings	NOUN
upset	ADJ
upsetly	ADV
uranium	NOUN
uraniums	NOUN
urban	ADJ
urbanly	ADV
urge	VERB
urged	VERB
urgent	ADJ
urgently	ADV
urges	VERB
urging	VERB
usage	NOUN
usages	NOUN
use	NOUN
used	VERB
useful	ADJ
usefully	ADV
useless	ADJ
uselessly	ADV
user	NOUN
users	NOUN
uses	NOUN
using	VERB
usual	ADJ
usually	ADV
vacant	ADJ
vacantly	ADV
vaccine	NOUN
vaccines	NOUN
vague	ADJ
vaguely	ADV
value	NOUN
valued	VERB
values	NOUN
valuing	VERB
van	NOUN
vans	NOUN
varieties	NOUN
variety	NOUN
vast	ADJ
vastly	ADV
vehicle	NOUN
vehicles	NOUN
vendor	NOUN
vendors	NOUN
venezuelan	ADJ
verbal	ADJ
verbally	ADV
verified	VERB
verifies	VERB
verify	VERB
verifying	VERB
version	NOUN
versions	NOUN
vertex	NOUN
vertical	ADJ
vertically	ADV
vertices	NOUN
very	OTHER
vessel	NOUN
vessels	NOUN
veteran	NOUN
veteranly	ADV
veterans	NOUN
veto	NOUN
vetoed	VERB
vetoes	NOUN
vetoing	VERB
via	OTHER
viable	ADJ
viably	ADV
vibrant	ADJ
vibrantly	ADV
vicious	ADJ
viciously	ADV
victim	NOUN
victims	NOUN
victories	NOUN
victory	NOUN
video	NOUN
videos	NOUN
vietnamese	ADJ
view	NOUN
viewed	VERB
viewing	VERB
views	NOUN
village	NOUN
villages	NOUN
violate	VERB
violated	VERB
violates	VERB
violating	VERB
violation	NOUN
violations	NOUN
violence	NOUN
violences	NOUN
violent	ADJ
violently	ADV
virtual	ADJ
virtually	ADV
virus	NOUN
viruses	NOUN
visa	NOUN
visas	NOUN
visible	ADJ
visibly	ADV
vision	NOUN
visions	NOUN
visit	NOUN
visited	VERB
visiting	VERB
visitor	NOUN
visitors	NOUN
visits	NOUN
vital	ADJ
vitally	ADV
vocal	ADJ
vocally	ADV
voice	NOUN
voiced	VERB
voices	NOUN
voicing	VERB
volatile	ADJ
volatily	ADV
volcano	NOUN
volcanoes	NOUN
volume	NOUN
volumes	NOUN
voluntary	ADJ
volunteer	NOUN
volunteers	NOUN
vote	NOUN
voted	VERB
voter	NOUN
voters	NOUN
votes	NOUN
voting	VERB
vow	VERB
vowed	VERB
vowing	VERB
vows	VERB
vulnerable	ADJ
vulnerably	ADV
wage	NOUN
wages	NOUN
wait	VERB
waited	VERB
waiting	VERB
waits	VERB
wake	VERB
wakes	VERB
waking	VERB
wale	NOUN
wales	NOUN
walk	NOUN
walked	VERB
walking	VERB
walks	NOUN
wall	NOUN
walls	NOUN
want	VERB
wanted	VERB
wanting	VERB
wants	VERB
war	NOUN
warfare	NOUN
warfares	NOUN
warhead	NOUN
warheads	NOUN
warm	ADJ
warmly	ADV
warn	VERB
warned	VERB
warning	NOUN
warnings	NOUN
warns	VERB
warrant	NOUN
warrants	NOUN
wars	NOUN
was	OTHER
wash	VERB
washed	VERB
washes	VERB
washing	VERB
wasn	OTHER
waste	NOUN
wastes	NOUN
watch	NOUN
watched	VERB
watches	NOUN
watching	VERB
water	NOUN
waters	NOUN
wave	NOUN
waved	VERB
waves	NOUN
waving	VERB
way	NOUN
ways	NOUN
we	OTHER
weak	ADJ
weaken	VERB
weakened	VERB
weakening	VERB
weakens	VERB
weakly	ADV
weakness	NOUN
weaknesses	NOUN
wealth	NOUN
wealths	NOUN
wealthy	ADJ
weapon	NOUN
weapons	NOUN
wear	VERB
wearing	VERB
wears	VERB
weather	NOUN
weathers	NOUN
web	NOUN
webs	NOUN
website	NOUN
websites	NOUN
week	NOUN
weekend	NOUN
weekends	NOUN
weeks	NOUN
weep	VERB
weeping	VERB
weeps	VERB
weigh	VERB
weighed	VERB
weighing	VERB
weighs	VERB
weight	NOUN
weights	NOUN
weird	ADJ
weirdly	ADV
welcome	ADJ
welcomed	VERB
welcomely	ADV
welcomes	VERB
welcoming	VERB
welfare	NOUN
welfares	NOUN
well	ADV
welsh	ADJ
went	VERB
wept	VERB
were	OTHER
weren	OTHER
west	NOUN
western	ADJ
westernly	ADV
wests	NOUN
wet	ADJ
what	OTHER
whatsoever	ADV
wheat	NOUN
wheats	NOUN
wheel	NOUN
wheels	NOUN
when	OTHER
where	OTHER
wherever	ADV
whether	OTHER
which	OTHER
while	OTHER
white	ADJ
whitely	ADV
who	OTHER
whom	OTHER
why	OTHER
wide	ADJ
widely	ADV
widen	VERB
widened	VERB
widening	VERB
widens	VERB
widow	NOUN
widows	NOUN
width	NOUN
widths	NOUN
wife	NOUN
wild	ADJ
wildly	ADV
will	OTHER
willing	ADJ
willingly	ADV
win	VERB
wind	NOUN
window	NOUN
windows	NOUN
winds	NOUN
winner	NOUN
winners	NOUN
winning	VERB
wins	VERB
winter	NOUN
winters	NOUN
wire	NOUN
wires	NOUN
wisdom	NOUN
wisdoms	NOUN
wise	ADJ
wisely	ADV
wish	VERB
wished	VERB
wishes	VERB
wishing	VERB
with	OTHER
withdraw	VERB
withdrawing	VERB
withdrawn	VERB
withdraws	VERB
withdrew	VERB
within	OTHER
without	OTHER
witness	NOUN
witnessed	VERB
witnesses	NOUN
witnessing	VERB
wives	NOUN
wo	OTHER
woke	VERB
woken	VERB
wolf	NOUN
wolves	NOUN
woman	NOUN
womans	NOUN
women	NOUN
won	VERB
wonder	VERB
wondered	VERB
wondering	VERB
wonders	VERB
wooden	ADJ
woodenly	ADV
word	NOUN
words	NOUN
wore	VERB
work	NOUN
worked	VERB
worker	NOUN
workers	NOUN
workforce	NOUN
workforces	NOUN
working	VERB
works	NOUN
workshop	NOUN
workshops	NOUN
world	NOUN
worlds	NOUN
worldwide	ADJ
worldwidely	ADV
worn	VERB
worried	VERB
worries	VERB
worry	VERB
worrying	VERB
worse	ADJ
worsely	ADV
worship	NOUN
worships	NOUN
worst	ADJ
worstly	ADV
worth	ADJ
worthly	ADV
worthy	ADJ
would	OTHER
wouldn	OTHER
wound	NOUN
wounded	VERB
wounding	VERB
wounds	NOUN
wrap	VERB
wrapped	VERB
wrapping	VERB
wraps	VERB
wreck	NOUN
wrecks	NOUN
write	VERB
writer	NOUN
writers	NOUN
writes	VERB
writing	VERB
written	VERB
wrong	ADJ
wrongly	ADV
wrote	VERB
year	NOUN
years	NOUN
yemeni	ADJ
yesterday	ADV
yet	OTHER
yield	VERB
yielded	VERB
yielding	VERB
yields	VERB
you	OTHER
young	ADJ
youngly	ADV
your	OTHER
yours	OTHER
yourself	OTHER
yourselves	OTHER
youth	NOUN
youths	NOUN
zone	NOUN
zones	NOUN
)NTDATA";

const char* kLemmaLexicon = R"NTDATA(
accepted	accept
accepting	accept
accepts	accept
accessed	access
accesses	access
accessing	access
accompanied	accompany
accompanies	accompany
accompanying	accompany
accords	accord
accounts	account
accused	accuse
accuses	accuse
accusing	accuse
achieved	achieve
achieves	achieve
achieving	achieve
acknowledged	acknowledge
acknowledges	acknowledge
acknowledging	acknowledge
acquired	acquire
acquires	acquire
acquiring	acquire
acted	act
acting	act
actions	action
activists	activist
activities	activity
acts	act
added	add
adding	add
addressed	address
addresses	address
addressing	address
adds	add
adjusted	adjust
adjusting	adjust
adjusts	adjust
administrations	administration
admits	admit
admitted	admit
admitting	admit
adopted	adopt
adopting	adopt
adopts	adopt
advanced	advance
advances	advance
advancing	advance
advantages	advantage
advices	advice
advised	advise
advises	advise
advising	advise
affected	affect
affecting	affect
affects	affect
afforded	afford
affording	afford
affords	afford
agencies	agency
agendas	agenda
ages	age
agreed	agree
agreements	agreement
agrees	agree
agreing	agree
aids	aid
aimed	aim
aiming	aim
aims	aim
airlines	airline
airports	airport
airs	air
alarms	alarm
alleged	allege
alleges	allege
alleging	allege
alliances	alliance
allies	ally
allowed	allow
allowing	allow
allows	allow
amendments	amendment
amounts	amount
analyses	analysis
analysis	analysis
animals	animal
anniversaries	anniversary
announced	announce
announcements	announcement
announces	announce
announcing	announce
answered	answer
answering	answer
answers	answer
anticipated	anticipate
anticipates	anticipate
anticipating	anticipate
apologized	apologize
apologizes	apologize
apologizing	apologize
appealed	appeal
appealing	appeal
appeals	appeal
appeared	appear
appearing	appear
appears	appear
appendices	appendix
applied	apply
applies	apply
applying	apply
appointed	appoint
appointing	appoint
appoints	appoint
approached	approach
approaches	approach
approaching	approach
approvals	approval
approved	approve
approves	approve
approving	approve
areas	area
argued	argue
argues	argue
arguing	argue
arisen	arise
arises	arise
arising	arise
armies	army
arms	arm
arose	arise
arrested	arrest
arresting	arrest
arrests	arrest
arrivals	arrival
arrived	arrive
arrives	arrive
arriving	arrive
articles	article
artilleries	artillery
arts	art
asked	ask
asking	ask
asks	ask
assaulted	assault
assaulting	assault
assaults	assault
assemblies	assembly
asserted	assert
asserting	assert
asserts	assert
assessed	assess
assesses	assess
assessing	assess
assets	asset
assigned	assign
assigning	assign
assigns	assign
assisted	assist
assisting	assist
assists	assist
assumed	assume
assumes	assume
assuming	assume
assured	assure
assures	assure
assuring	assure
ate	eat
atlas	atlas
attached	attach
attaches	attach
attaching	attach
attacked	attack
attacking	attack
attacks	attack
attempted	attempt
attempting	attempt
attempts	attempt
attended	attend
attending	attend
attends	attend
attentions	attention
attracted	attract
attracting	attract
attracts	attract
audiences	audience
authorities	authority
authorized	authorize
authorizes	authorize
authorizing	authorize
autumns	autumn
averages	average
aviations	aviation
avoided	avoid
avoiding	avoid
avoids	avoid
axes	axis
backed	back
backgrounds	background
backing	back
backs	back
bags	bag
balances	balance
ballots	ballot
banks	bank
banned	ban
banning	ban
bans	ban
barrels	barrel
based	base
bases	basis
basing	base
basis	basis
battled	battle
battles	battle
battling	battle
beaches	beach
bearing	bear
bears	bear
beaten	beat
beating	beat
beats	beat
became	become
becomes	become
becoming	become
been	be
began	begin
beginning	begin
begins	begin
begun	begin
behaved	behave
behaves	behave
behaving	behave
being	be
believed	believe
believes	believe
believing	believe
bells	bell
belonged	belong
belonging	belong
belongs	belong
belts	belt
benches	bench
bending	bend
bends	bend
benefited	benefit
benefiting	benefit
benefits	benefit
bent	bend
bias	bias
bidded	bid
bidding	bid
bids	bid
bills	bill
binding	bind
binds	bind
biologies	biology
birds	bird
bit	bite
bites	bite
biting	bite
bitten	bite
blamed	blame
blames	blame
blaming	blame
blasts	blast
blew	blow
blocked	block
blocking	block
blocks	block
bloods	blood
blowing	blow
blown	blow
blows	blow
boarded	board
boarding	board
boards	board
boats	boat
bodies	body
bombings	bombing
bombs	bomb
books	book
boosted	boost
boosting	boost
boosts	boost
borders	border
bore	bear
borne	bear
borrowed	borrow
borrowing	borrow
borrows	borrow
bosses	boss
bothered	bother
bothering	bother
bothers	bother
bottles	bottle
bottoms	bottom
bought	buy
bound	bind
boundaries	boundary
boxes	box
boys	boy
brains	brain
branches	branch
breaches	breach
breads	bread
breaking	break
breaks	break
bridges	bridge
briefed	brief
briefing	brief
briefs	brief
brigades	brigade
bringing	bring
brings	bring
broadcasted	broadcast
broadcasting	broadcast
broadcasts	broadcast
broke	break
broken	break
brothers	brother
brought	bring
budgets	budget
building	build
buildings	building
builds	build
built	build
bullets	bullet
burdens	burden
bureaus	bureau
burned	burn
burning	burn
burns	burn
bursting	burst
bursts	burst
buses	bus
businesses	business
buying	buy
buys	buy
cabinets	cabinet
cables	cable
called	call
calling	call
calls	call
calmed	calm
calming	calm
calms	calm
calves	calf
came	come
campaigned	campaign
campaigning	campaign
campaigns	campaign
camps	camp
canals	canal
canceled	cancel
canceling	cancel
cancels	cancel
cancers	cancer
candidates	candidate
canvas	canvas
capitals	capital
captains	captain
captured	capture
captures	capture
capturing	capture
cards	card
cared	care
careers	career
cares	care
cargoes	cargo
cargos	cargo
caring	care
carried	carry
carries	carry
carrying	carry
cars	car
cases	case
cashes	cash
casting	cast
casts	cast
casualties	casualty
catches	catch
catching	catch
categories	category
cattles	cattle
caught	catch
caused	cause
causes	cause
causing	cause
ceased	cease
ceasefires	ceasefire
ceases	cease
ceasing	cease
celebrated	celebrate
celebrates	celebrate
celebrating	celebrate
cells	cell
censuses	census
centers	center
centuries	century
ceremonies	ceremony
chains	chain
chairmans	chairman
chairs	chair
challenged	challenge
challenges	challenge
challenging	challenge
champions	champion
chances	chance
changed	change
changes	change
changing	change
channels	channel
chaos	chaos
chaoses	chaos
chapters	chapter
charged	charge
charges	charge
charging	charge
charities	charity
charts	chart
chased	chase
chases	chase
chasing	chase
checked	check
checking	check
checkpoints	checkpoint
checks	check
cheered	cheer
cheering	cheer
cheers	cheer
chemicals	chemical
chests	chest
chiefs	chief
children	child
choices	choice
chooses	choose
choosing	choose
chose	choose
chosen	choose
churches	church
circles	circle
cited	cite
cites	cite
cities	city
citing	cite
citizens	citizen
claimed	claim
claiming	claim
claims	claim
clarified	clarify
clarifies	clarify
clarifying	clarify
clashed	clash
clashes	clash
clashing	clash
classes	class
classics	classic
cleaned	clean
cleaning	clean
cleans	clean
cleared	clear
clearing	clear
clears	clear
clicks	click
clients	client
climates	climate
climbed	climb
climbing	climb
climbs	climb
clinging	cling
clings	cling
clinics	clinic
clocks	clock
closed	close
closes	close
closing	close
clouds	cloud
clubs	club
clung	cling
coaches	coach
coalitions	coalition
coals	coal
coasts	coast
codes	code
collapsed	collapse
collapses	collapse
collapsing	collapse
collected	collect
collecting	collect
collects	collect
colleges	college
colonels	colonel
columns	column
combats	combat
combined	combine
combines	combine
combining	combine
comes	come
coming	come
commanders	commander
commands	command
commented	comment
commenting	comment
comments	comment
commerces	commerce
commissions	commission
commits	commit
committed	commit
committees	committee
committing	commit
commodities	commodity
communicated	communicate
communicates	communicate
communicating	communicate
communities	community
companies	company
compared	compare
compares	compare
comparing	compare
comparisons	comparison
competed	compete
competes	compete
competing	compete
competitions	competition
complained	complain
complaining	complain
complains	complain
complaints	complaint
completed	complete
completes	complete
completing	complete
complied	comply
complies	comply
complying	comply
compounds	compound
compromises	compromise
computers	computer
conceded	concede
concedes	concede
conceding	concede
concerned	concern
concerning	concern
concerns	concern
concerts	concert
concluded	conclude
concludes	conclude
concluding	conclude
conclusions	conclusion
condemned	condemn
condemning	condemn
condemns	condemn
conditions	condition
conducted	conduct
conducting	conduct
conducts	conduct
conferences	conference
confidences	confidence
confirmed	confirm
confirming	confirm
confirms	confirm
conflicts	conflict
confronted	confront
confronting	confront
confronts	confront
congresses	congress
connected	connect
connecting	connect
connections	connection
connects	connect
consensuses	consensus
consequences	consequence
considered	consider
considering	consider
considers	consider
consisted	consist
consisting	consist
consists	consist
consolidated	consolidate
consolidates	consolidate
consolidating	consolidate
constituted	constitute
constitutes	constitute
constituting	constitute
constitutions	constitution
constructed	construct
constructing	construct
constructions	construction
constructs	construct
consulted	consult
consulting	consult
consults	consult
contacts	contact
contained	contain
containing	contain
contains	contain
contended	contend
contending	contend
contends	contend
contents	content
contests	contest
contexts	context
continued	continue
continues	continue
continuing	continue
contracted	contract
contracting	contract
contracts	contract
contrasts	contrast
contributed	contribute
contributes	contribute
contributing	contribute
controlled	control
controlling	control
controls	control
controversies	controversy
convened	convene
convenes	convene
convening	convene
conventions	convention
convicted	convict
convicting	convict
convicts	convict
convinced	convince
convinces	convince
convincing	convince
convoys	convoy
cooperated	cooperate
cooperates	cooperate
cooperating	cooperate
cooperations	cooperation
coordinated	coordinate
coordinates	coordinate
coordinating	coordinate
coped	cope
copes	cope
copied	copy
copies	copy
coping	cope
cops	cop
copying	copy
corners	corner
corporations	corporation
corps	corps
corrected	correct
correcting	correct
corrects	correct
correspondents	correspondent
corridors	corridor
corruptions	corruption
costed	cost
costing	cost
costs	cost
councils	council
counsels	counsel
counted	count
countered	counter
countering	counter
counters	counter
counties	county
counting	count
countries	country
counts	count
couples	couple
coups	coup
courages	courage
courses	course
courts	court
cousins	cousin
coverages	coverage
covered	cover
covering	cover
covers	cover
cracked	crack
cracking	crack
cracks	crack
crashed	crash
crashes	crash
crashing	crash
created	create
creates	create
creating	create
credits	credit
creeping	creep
creeps	creep
crept	creep
crews	crew
cried	cry
cries	cry
crimes	crime
crises	crisis
crisis	crisis
crisises	crisis
criteria	criterion
criticisms	criticism
criticized	criticize
criticizes	criticize
criticizing	criticize
critics	critic
crops	crop
crossed	cross
crosses	cross
crossing	cross
crossings	crossing
crowds	crowd
crowns	crown
cruises	cruise
crushed	crush
crushes	crush
crushing	crush
crying	cry
cultures	culture
cups	cup
curfews	curfew
currencies	currency
curricula	curriculum
customers	customer
cuts	cut
cutting	cut
cycles	cycle
damaged	damage
damages	damage
damaging	damage
dams	dam
danced	dance
dances	dance
dancing	dance
dangers	danger
dared	dare
dares	dare
daring	dare
data	datum
datas	data
dates	date
daughters	daughter
dawns	dawn
days	day
dealing	deal
deals	deal
dealt	deal
deaths	death
debated	debate
debates	debate
debating	debate
debrises	debris
debts	debt
decades	decade
decided	decide
decides	decide
deciding	decide
decisions	decision
declared	declare
declares	declare
declaring	declare
declined	decline
declines	decline
declining	decline
decreased	decrease
decreases	decrease
decreasing	decrease
decrees	decree
defeated	defeat
defeating	defeat
defeats	defeat
defectors	defector
defended	defend
defending	defend
defends	defend
defenses	defense
deficits	deficit
defined	define
defines	define
defining	define
degrees	degree
delayed	delay
delaying	delay
delays	delay
delegates	delegate
delegations	delegation
delivered	deliver
delivering	deliver
delivers	deliver
demanded	demand
demanding	demand
demands	demand
democracies	democracy
demonstrated	demonstrate
demonstrates	demonstrate
demonstrating	demonstrate
demonstrations	demonstration
denied	deny
denies	deny
denying	deny
departed	depart
departing	depart
departments	department
departs	depart
departures	departure
depended	depend
depending	depend
depends	depend
deployed	deploy
deploying	deploy
deployments	deployment
deploys	deploy
deposits	deposit
depths	depth
deputies	deputy
described	describe
describes	describe
describing	describe
deserts	desert
deserved	deserve
deserves	deserve
deserving	deserve
designed	design
designing	design
designs	design
desires	desire
desks	desk
destinations	destination
destroyed	destroy
destroying	destroy
destroys	destroy
destructions	destruction
detailed	detail
detailing	detail
details	detail
detained	detain
detainees	detainee
detaining	detain
detains	detain
detentions	detention
detered	deter
detering	deter
determined	determine
determines	determine
determining	determine
deters	deter
developed	develop
developing	develop
develops	develop
devices	device
diagnoses	diagnosis
dialogues	dialogue
diameters	diameter
did	do
died	die
dies	die
diesels	diesel
diets	diet
differences	difference
differred	differ
differring	differ
differs	differ
digging	dig
digs	dig
diing	die
dinners	dinner
diplomacies	diplomacy
diplomats	diplomat
directions	direction
directors	director
disagreed	disagree
disagrees	disagree
disagreing	disagree
disappeared	disappear
disappearing	disappear
disappears	disappear
disasters	disaster
disciplines	discipline
discourses	discourse
discovered	discover
discoveries	discovery
discovering	discover
discovers	discover
discussed	discuss
discusses	discuss
discussing	discuss
discussions	discussion
diseases	disease
dismissed	dismiss
dismisses	dismiss
dismissing	dismiss
displayed	display
displaying	display
displays	display
disputed	dispute
disputes	dispute
disputing	dispute
disrupted	disrupt
disrupting	disrupt
disrupts	disrupt
dissolved	dissolve
dissolves	dissolve
dissolving	dissolve
distances	distance
distributed	distribute
distributes	distribute
distributing	distribute
districts	district
divided	divide
divides	divide
dividing	divide
divisions	division
doctors	doctor
doctrines	doctrine
documents	document
does	do
dogs	dog
doing	do
dollars	dollar
domains	domain
dominated	dominate
dominates	dominate
dominating	dominate
donated	donate
donates	donate
donating	donate
done	do
doors	door
doses	dose
doubled	double
doubles	double
doubling	double
doubted	doubt
doubting	doubt
doubts	doubt
downloaded	download
downloading	download
downloads	download
downtowns	downtown
dozens	dozen
drafts	draft
dragged	drag
dragging	drag
drags	drag
dramas	drama
drank	drink
drawing	draw
drawn	draw
draws	draw
dreams	dream
drew	draw
drills	drill
drinking	drink
drinks	drink
driven	drive
drivers	driver
drives	drive
driving	drive
drones	drone
dropped	drop
dropping	drop
drops	drop
droughts	drought
drove	drive
drowned	drown
drowning	drown
drowns	drown
drugs	drug
drunk	drink
dug	dig
duties	duty
earned	earn
earning	earn
earnings	earnings
earns	earn
earthquakes	earthquake
earths	earth
eased	ease
eases	ease
easing	ease
easts	east
eaten	eat
eating	eat
eats	eat
echoed	echo
echoes	echo
echoing	echo
economics	economics
economies	economy
economists	economist
edges	edge
edited	edit
editing	edit
editors	editor
edits	edit
educations	education
effects	effect
efforts	effort
elected	elect
electing	elect
elections	election
electricities	electricity
elects	elect
elements	element
eliminated	eliminate
eliminates	eliminate
eliminating	eliminate
elites	elite
emails	email
embargoes	embargo
embargos	embargo
embassies	embassy
emerged	emerge
emergencies	emergency
emerges	emerge
emerging	emerge
emissions	emission
emphases	emphasis
emphasized	emphasize
emphasizes	emphasize
emphasizing	emphasize
empires	empire
employed	employ
employees	employee
employers	employer
employing	employ
employments	employment
employs	employ
enabled	enable
enables	enable
enabling	enable
encountered	encounter
encountering	encounter
encounters	encounter
encouraged	encourage
encourages	encourage
encouraging	encourage
ended	end
ending	end
endorsed	endorse
endorses	endorse
endorsing	endorse
ends	end
endured	endure
endures	endure
enduring	endure
enemies	enemy
energies	energy
enforced	enforce
enforces	enforce
enforcing	enforce
engaged	engage
engages	engage
engaging	engage
engineers	engineer
engines	engine
enhanced	enhance
enhances	enhance
enhancing	enhance
enjoyed	enjoy
enjoying	enjoy
enjoys	enjoy
ensured	ensure
ensures	ensure
ensuring	ensure
entered	enter
entering	enter
enters	enter
entrances	entrance
entries	entry
environments	environment
episodes	episode
equipments	equipment
eras	era
errors	error
escalated	escalate
escalates	escalate
escalating	escalate
escaped	escape
escapes	escape
escaping	escape
established	establish
establishes	establish
establishing	establish
estates	estate
estimated	estimate
estimates	estimate
estimating	estimate
ethics	ethics
ethicses	ethics
evacuated	evacuate
evacuates	evacuate
evacuating	evacuate
evacuations	evacuation
evaluated	evaluate
evaluates	evaluate
evaluating	evaluate
evenings	evening
events	event
evidences	evidence
examined	examine
examines	examine
examining	examine
examples	example
exams	exam
exceeded	exceed
exceeding	exceed
exceeds	exceed
exchanged	exchange
exchanges	exchange
exchanging	exchange
excluded	exclude
excludes	exclude
excluding	exclude
excuses	excuse
executed	execute
executes	execute
executing	execute
executions	execution
exercises	exercise
exiles	exile
existed	exist
existing	exist
exists	exist
exits	exit
expanded	expand
expanding	expand
expands	expand
expansions	expansion
expected	expect
expecting	expect
expects	expect
expelled	expel
expelling	expel
expels	expel
expenses	expense
experienced	experience
experiences	experience
experiencing	experience
experts	expert
explained	explain
explaining	explain
explains	explain
exploded	explode
explodes	explode
exploding	explode
explored	explore
explores	explore
exploring	explore
explosions	explosion
explosives	explosive
exported	export
exporting	export
exports	export
exposed	expose
exposes	expose
exposing	expose
exposures	exposure
expressed	express
expresses	express
expressing	express
extended	extend
extending	extend
extends	extend
extensions	extension
extents	extent
extremists	extremist
eyes	eye
faced	face
faces	face
facilities	facility
facing	face
factories	factory
factors	factor
facts	fact
failed	fail
failing	fail
fails	fail
failures	failure
faiths	faith
fallen	fall
falling	fall
falls	fall
fames	fame
families	family
farmers	farmer
farms	farm
fashions	fashion
fathers	father
faults	fault
favored	favor
favoring	favor
favors	favor
feared	fear
fearing	fear
fears	fear
featured	feature
features	feature
featuring	feature
fed	feed
feeding	feed
feeds	feed
feeling	feel
feels	feel
fees	fee
feet	foot
fell	fall
felt	feel
females	female
fences	fence
festivals	festival
fields	field
fighters	fighter
fighting	fight
fightings	fighting
fights	fight
figures	figure
filed	file
files	file
filing	file
filled	fill
filling	fill
fills	fill
films	film
financed	finance
finances	finance
financing	finance
finding	find
findings	finding
finds	find
finished	finish
finishes	finish
finishing	finish
fired	fire
fires	fire
firing	fire
firms	firm
fishes	fish
fixed	fix
fixes	fix
fixing	fix
flags	flag
fled	flee
fleeing	flee
flees	flee
fleets	fleet
flew	fly
flies	fly
flights	flight
flooded	flood
flooding	flood
floods	flood
floors	floor
flowed	flow
flowing	flow
flown	fly
flows	flow
flus	flu
flying	fly
focused	focus
focuses	focus
focusing	focus
followed	follow
following	follow
follows	follow
foods	food
footballs	football
foots	foot
forced	force
forces	force
forcing	force
forecasted	forecast
forecasting	forecast
forecasts	forecast
forests	forest
forgets	forget
forgetting	forget
forgot	forget
forgotten	forget
formations	formation
formed	form
forming	form
forms	form
fortunes	fortune
forums	forum
fostered	foster
fostering	foster
fosters	foster
fought	fight
found	find
framed	frame
frames	frame
framing	frame
frauds	fraud
freed	free
freedoms	freedom
frees	free
freezes	freeze
freezing	freeze
freing	free
frequencies	frequency
friends	friend
frontiers	frontier
fronts	front
froze	freeze
frozen	freeze
fruits	fruit
fueled	fuel
fueling	fuel
fuels	fuel
fulfilled	fulfill
fulfilling	fulfill
fulfills	fulfill
functions	function
funded	fund
funding	fund
funds	fund
funerals	funeral
futures	future
gained	gain
gaining	gain
gains	gain
games	game
gaps	gap
gardens	garden
gases	gas
gates	gate
gathered	gather
gathering	gather
gathers	gather
gave	give
geese	goose
genders	gender
generals	general
generated	generate
generates	generate
generating	generate
generations	generation
genocides	genocide
gestures	gesture
gets	get
getting	get
girls	girl
given	give
gives	give
giving	give
goals	goal
goes	go
going	go
golds	gold
golfs	golf
gone	go
goods	good
got	get
gotten	get
governed	govern
governing	govern
governments	government
governors	governor
governs	govern
grabbed	grab
grabbing	grab
grabs	grab
grades	grade
grains	grain
granted	grant
granting	grant
grants	grant
graphs	graph
grasses	grass
greeted	greet
greeting	greet
greets	greet
grew	grow
grounds	ground
groups	group
growing	grow
grown	grow
grows	grow
growths	growth
guarded	guard
guarding	guard
guards	guard
guerrillas	guerrilla
guessed	guess
guesses	guess
guessing	guess
guests	guest
guidances	guidance
guided	guide
guides	guide
guiding	guide
gulfs	gulf
guns	gun
had	have
halted	halt
halting	halt
halts	halt
halves	half
hampered	hamper
hampering	hamper
hampers	hamper
handled	handle
handles	handle
handling	handle
hands	hand
hanging	hang
hangs	hang
happened	happen
happening	happen
happens	happen
harbors	harbor
hardwares	hardware
harmed	harm
harming	harm
harms	harm
has	have
hates	hate
hats	hat
having	have
headed	head
heading	head
headlines	headline
headquarters	headquarters
headquarterses	headquarters
heads	head
healths	health
heard	hear
hearing	hear
hearings	hearing
hears	hear
hearts	heart
heats	heat
heights	height
held	hold
helicopters	helicopter
helped	help
helping	help
helps	help
heroes	hero
hesitated	hesitate
hesitates	hesitate
hesitating	hesitate
hid	hide
hidden	hide
hides	hide
hiding	hide
highlighted	highlight
highlighting	highlight
highlights	highlight
hills	hill
hinted	hint
hinting	hint
hints	hint
hired	hire
hires	hire
hiring	hire
histories	history
hits	hit
hitting	hit
holding	hold
holds	hold
homelands	homeland
homes	home
honored	honor
honoring	honor
honors	honor
hoped	hope
hopes	hope
hoping	hope
horizons	horizon
horrors	horror
horses	horse
hospitals	hospital
hostages	hostage
hosted	host
hostilities	hostility
hosting	host
hosts	host
hotels	hotel
hours	hour
housed	house
households	household
houses	house
housing	house
housings	housing
hovered	hover
hovering	hover
hovers	hover
humanities	humanity
humans	human
hung	hang
hungers	hunger
hunted	hunt
hunting	hunt
hunts	hunt
hurricanes	hurricane
hurting	hurt
hurts	hurt
hypotheses	hypothesis
ices	ice
ideas	idea
identified	identify
identifies	identify
identifying	identify
identities	identity
ideologies	ideology
ignited	ignite
ignites	ignite
igniting	ignite
ignored	ignore
ignores	ignore
ignoring	ignore
illustrated	illustrate
illustrates	illustrate
illustrating	illustrate
images	image
imagined	imagine
imagines	imagine
imagining	imagine
immigrants	immigrant
immigrations	immigration
impacted	impact
impacting	impact
impacts	impact
implemented	implement
implementing	implement
implements	implement
implied	imply
implies	imply
implying	imply
imported	import
importing	import
imports	import
imposed	impose
imposes	impose
imposing	impose
improved	improve
improves	improve
improving	improve
incidents	incident
included	include
includes	include
including	include
incomes	income
increased	increase
increases	increase
increasing	increase
independences	independence
indicated	indicate
indicates	indicate
indicating	indicate
indices	index
individuals	individual
industries	industry
infantries	infantry
infected	infect
infecting	infect
infects	infect
inflations	inflation
influences	influence
informations	information
informed	inform
informing	inform
informs	inform
infrastructures	infrastructure
initiated	initiate
initiates	initiate
initiating	initiate
initiatives	initiative
injured	injure
injures	injure
injuries	injury
injuring	injure
innovations	innovation
inquiries	inquiry
insiders	insider
insisted	insist
insisting	insist
insists	insist
inspected	inspect
inspecting	inspect
inspections	inspection
inspectors	inspector
inspects	inspect
inspired	inspire
inspires	inspire
inspiring	inspire
installed	install
installing	install
installs	install
instances	instance
institutes	institute
institutions	institution
instruments	instrument
insulted	insult
insulting	insult
insults	insult
insurances	insurance
insurgencies	insurgency
insurgents	insurgent
intelligences	intelligence
intended	intend
intending	intend
intends	intend
intensified	intensify
intensifies	intensify
intensifying	intensify
intentions	intention
intents	intent
intercepted	intercept
intercepting	intercept
intercepts	intercept
interests	interest
interfered	interfere
interferes	interfere
interfering	interfere
interiors	interior
internets	internet
interventions	intervention
interviewed	interview
interviewing	interview
interviews	interview
introduced	introduce
introduces	introduce
introducing	introduce
invaded	invade
invades	invade
invading	invade
invasions	invasion
invested	invest
investigated	investigate
investigates	investigate
investigating	investigate
investigations	investigation
investigators	investigator
investing	invest
investments	investment
investors	investor
invests	invest
invited	invite
invites	invite
inviting	invite
involved	involve
involves	involve
involving	involve
iris	iris
is	be
islands	island
isolated	isolate
isolates	isolate
isolating	isolate
issued	issue
issues	issue
issuing	issue
items	item
jails	jail
jets	jet
jobs	job
joined	join
joining	join
joins	join
journalists	journalist
journals	journal
judged	judge
judges	judge
judging	judge
judgments	judgment
jumped	jump
jumping	jump
jumps	jump
juries	jury
justices	justice
justified	justify
justifies	justify
justifying	justify
keeping	keep
keeps	keep
kept	keep
kicked	kick
kicking	kick
kicks	kick
kidnaped	kidnap
kidnaping	kidnap
kidnaps	kidnap
kids	kid
killed	kill
killing	kill
kills	kill
kilometers	kilometer
kingdoms	kingdom
kings	king
kneeling	kneel
kneels	kneel
knelt	kneel
knew	know
knives	knife
knocked	knock
knocking	knock
knocks	knock
knowing	know
knowledges	knowledge
known	know
knows	know
labeled	label
labeling	label
labels	label
labors	labor
labs	lab
lacked	lack
lacking	lack
lacks	lack
laid	lay
lain	lie
lakes	lake
landed	land
landing	land
lands	land
landscapes	landscape
languages	language
laptops	laptop
lasted	last
lasting	last
lasts	last
laughed	laugh
laughing	laugh
laughs	laugh
launched	launch
launches	launch
launching	launch
lawmakers	lawmaker
laws	law
lawsuits	lawsuit
lawyers	lawyer
lay	lie
laying	lay
lays	lay
leaders	leader
leaderships	leadership
leading	lead
leads	lead
leagues	league
learned	learn
learning	learn
learns	learn
leaves	leaf
leaving	leave
led	lead
left	leave
lending	lend
lends	lend
lens	lens
lent	lend
lets	let
letting	let
levels	level
levied	levy
levies	levy
levying	levy
liberated	liberate
liberates	liberate
liberating	liberate
liberties	liberty
libraries	library
licenses	license
lies	lie
lieutenants	lieutenant
lifted	lift
lifting	lift
lifts	lift
lights	light
liked	like
likes	like
liking	like
limited	limit
limiting	limit
limits	limit
lines	line
linked	link
linking	link
links	link
lions	lion
liquids	liquid
listed	list
listened	listen
listening	listen
listens	listen
listing	list
lists	list
lived	live
lives	life
living	live
loaded	load
loading	load
loads	load
loaves	loaf
lobbied	lobby
lobbies	lobby
lobbying	lobby
located	locate
locates	locate
locating	locate
locked	lock
locking	lock
locks	lock
logics	logic
looked	look
looking	look
looks	look
loomed	loom
looming	loom
looms	loom
loses	lose
losing	lose
losses	loss
lost	lose
lots	lot
loves	love
lying	lie
machines	machine
made	make
magazines	magazine
magics	magic
mainlands	mainland
maintained	maintain
maintaining	maintain
maintains	maintain
majorities	majority
makes	make
making	make
males	male
malls	mall
managed	manage
manages	manage
managing	manage
mandates	mandate
mans	man
maps	map
marched	march
marches	march
marching	march
margins	margin
marines	marine
marked	mark
markets	market
marking	mark
marks	mark
married	marry
marries	marry
marrying	marry
massacres	massacre
matched	match
matches	match
matching	match
materials	material
mathematics	mathematics
matrices	matrix
mattered	matter
mattering	matter
matters	matter
mayors	mayor
meals	meal
meaning	mean
means	means
meant	mean
measured	measure
measures	measure
measuring	measure
mechanisms	mechanism
medals	medal
media	medium
meeting	meet
meetings	meeting
meets	meet
members	member
memberships	membership
memoranda	memorandum
memories	memory
memos	memo
men	man
mentioned	mention
mentioning	mention
mentions	mention
merged	merge
merges	merge
merging	merge
messages	message
met	meet
metals	metal
meters	meter
methods	method
metros	metro
mice	mouse
midnights	midnight
migrants	migrant
migrated	migrate
migrates	migrate
migrating	migrate
migrations	migration
miles	mile
milestones	milestone
militants	militant
militaries	military
militias	militia
milks	milk
mills	mill
minds	mind
mines	mine
ministers	minister
ministries	ministry
minorities	minority
minutes	minute
missiles	missile
missions	mission
mistakes	mistake
mixes	mix
mixtures	mixture
mobilized	mobilize
mobilizes	mobilize
mobilizing	mobilize
mobs	mob
models	model
modes	mode
moments	moment
momentums	momentum
moneys	money
monitored	monitor
monitoring	monitor
monitors	monitor
monopolies	monopoly
months	month
monuments	monument
moods	mood
mornings	morning
mosques	mosque
mothers	mother
motions	motion
motivated	motivate
motivates	motivate
motivating	motivate
motives	motive
motors	motor
mountains	mountain
mounted	mount
mounting	mount
mounts	mount
mouths	mouth
moved	move
movements	movement
moves	move
movies	movie
moving	move
multitudes	multitude
murdered	murder
murdering	murder
murders	murder
muscles	muscle
museums	museum
musicians	musician
musics	music
named	name
names	name
naming	name
narratives	narrative
nations	nation
natures	nature
navies	navy
needed	need
needing	need
needs	need
negotiated	negotiate
negotiates	negotiate
negotiating	negotiate
negotiations	negotiation
neighborhoods	neighborhood
neighbors	neighbor
networks	network
news	news
newses	news
newspapers	newspaper
nights	night
nobodies	nobody
noises	noise
nominations	nomination
noons	noon
norths	north
noted	note
notes	note
noticed	notice
notices	notice
noticing	notice
notified	notify
notifies	notify
notifying	notify
noting	note
notions	notion
novels	novel
numbers	number
nurses	nurse
oases	oasis
objectives	objective
objects	object
obligations	obligation
observers	observer
obtained	obtain
obtaining	obtain
obtains	obtain
occasions	occasion
occupations	occupation
occupied	occupy
occupies	occupy
occupying	occupy
occurred	occur
occurring	occur
occurs	occur
oceans	ocean
offered	offer
offering	offer
offers	offer
officers	officer
offices	office
officials	official
oils	oil
opened	open
opening	open
openings	opening
opens	open
operated	operate
operates	operate
operating	operate
operations	operation
opinions	opinion
opponents	opponent
opportunities	opportunity
opposed	oppose
opposes	oppose
opposing	oppose
oppositions	opposition
options	option
ordered	order
ordering	order
orders	order
organizations	organization
organized	organize
organizes	organize
organizing	organize
origins	origin
ousted	oust
ousting	oust
ousts	oust
outbreaks	outbreak
outcomes	outcome
outlets	outlet
outlined	outline
outlines	outline
outlining	outline
outputs	output
outrages	outrage
overcame	overcome
overcomes	overcome
overcoming	overcome
overhauled	overhaul
overhauling	overhaul
overhauls	overhaul
overseed	oversee
oversees	oversee
overseing	oversee
oversights	oversight
overthrew	overthrow
overthrowing	overthrow
overthrown	overthrow
overthrows	overthrow
owed	owe
owes	owe
owing	owe
owned	own
owners	owner
owning	own
owns	own
paces	pace
packages	package
pacts	pact
pages	page
paid	pay
pains	pain
panels	panel
panics	panic
papers	paper
parades	parade
parents	parent
parks	park
parliaments	parliament
participants	participant
participated	participate
participates	participate
participating	participate
parties	party
partners	partner
partnerships	partnership
parts	part
passages	passage
passed	pass
passengers	passenger
passes	pass
passing	pass
passports	passport
pastors	pastor
pasts	past
paths	path
patients	patient
patrols	patrol
patterns	pattern
paused	pause
pauses	pause
pausing	pause
paying	pay
payments	payment
pays	pay
peacekeepers	peacekeeper
peaces	peace
peaks	peak
peasants	peasant
penalties	penalty
pens	pen
pensions	pension
people	person
peoples	people
percents	percent
performances	performance
performed	perform
performing	perform
performs	perform
periods	period
permissions	permission
permits	permit
permitted	permit
permitting	permit
persuaded	persuade
persuades	persuade
persuading	persuade
petitions	petition
phases	phase
phenomena	phenomenon
phenomenons	phenomenon
philosophies	philosophy
phoned	phone
phones	phone
phoning	phone
photographs	photograph
photos	photo
phrases	phrase
physics	physics
picked	pick
picking	pick
picks	pick
pictures	picture
pieces	piece
pilots	pilot
pipelines	pipeline
places	place
planes	plane
planets	planet
planned	plan
planning	plan
plans	plan
plants	plant
plastics	plastic
plates	plate
platforms	platform
played	play
players	player
playing	play
plays	play
plazas	plaza
pleaded	plead
pleading	plead
pleads	plead
pledged	pledge
pledges	pledge
pledging	pledge
plots	plot
poems	poem
poets	poet
pointed	point
pointing	point
points	point
polices	police
policies	policy
politicians	politician
politics	politics
politicses	politics
polls	poll
pollutions	pollution
pools	pool
populations	population
portions	portion
portrayed	portray
portraying	portray
portrays	portray
ports	port
posed	pose
poses	pose
posing	pose
positioned	position
positioning	position
positions	position
possessed	possess
possesses	possess
possessing	possess
possibilities	possibility
postponed	postpone
postpones	postpone
postponing	postpone
posts	post
potatoes	potato
potentials	potential
poured	pour
pouring	pour
pours	pour
poverties	poverty
powers	power
practices	practice
praised	praise
praises	praise
praising	praise
precedents	precedent
predicted	predict
predicting	predict
predicts	predict
preferred	prefer
preferring	prefer
prefers	prefer
prepared	prepare
prepares	prepare
preparing	prepare
presences	presence
presented	present
presenting	present
presents	present
preserved	preserve
preserves	preserve
preserving	preserve
presidents	president
pressed	press
presses	press
pressing	press
pressured	pressure
pressures	pressure
pressuring	pressure
prevented	prevent
preventing	prevent
prevents	prevent
prices	price
prides	pride
priests	priest
princes	prince
principles	principle
printed	print
printing	print
prints	print
priorities	priority
prisoners	prisoner
prisons	prison
privacies	privacy
privileges	privilege
prizes	prize
probes	probe
problems	problem
procedures	procedure
proceeded	proceed
proceeding	proceed
proceedings	proceedings
proceeds	proceed
processed	process
processes	process
processing	process
produced	produce
producers	producer
produces	produce
producing	produce
productions	production
products	product
professions	profession
professors	professor
profiles	profile
profits	profit
programs	program
progresses	progress
prohibited	prohibit
prohibiting	prohibit
prohibits	prohibit
projects	project
promised	promise
promises	promise
promising	promise
promoted	promote
promotes	promote
promoting	promote
prompted	prompt
prompting	prompt
prompts	prompt
proofs	proof
propagandas	propaganda
properties	property
proposals	proposal
proposed	propose
proposes	propose
proposing	propose
prosecuted	prosecute
prosecutes	prosecute
prosecuting	prosecute
prosecutors	prosecutor
prospects	prospect
protected	protect
protecting	protect
protections	protection
protects	protect
protested	protest
protesters	protester
protesting	protest
protests	protest
proved	prove
proven	prove
proves	prove
provided	provide
provides	provide
providing	provide
provinces	province
proving	prove
provisions	provision
provoked	provoke
provokes	provoke
provoking	provoke
publics	public
published	publish
publishes	publish
publishing	publish
pulled	pull
pulling	pull
pulls	pull
punished	punish
punishes	punish
punishing	punish
purchased	purchase
purchases	purchase
purchasing	purchase
purposes	purpose
pursued	pursue
pursues	pursue
pursuing	pursue
pushed	push
pushes	push
pushing	push
puts	put
putting	put
qualified	qualify
qualifies	qualify
qualifying	qualify
qualities	quality
quarters	quarter
queens	queen
questioned	question
questioning	question
questions	question
quited	quit
quiting	quit
quits	quit
quoted	quote
quotes	quote
quoting	quote
radars	radar
radios	radio
raided	raid
raiding	raid
raids	raid
rails	rail
railways	railway
rains	rain
raised	raise
raises	raise
raising	raise
rallied	rally
rallies	rally
rallying	rally
ran	run
rang	ring
ranged	range
ranges	range
ranging	range
ranked	rank
ranking	rank
ranks	rank
ransoms	ransom
rates	rate
ratios	ratio
reached	reach
reaches	reach
reaching	reach
reacted	react
reacting	react
reactions	reaction
reacts	react
readers	reader
reading	read
reads	read
realities	reality
realized	realize
realizes	realize
realizing	realize
reasons	reason
reassured	reassure
reassures	reassure
reassuring	reassure
rebellions	rebellion
rebels	rebel
rebuilded	rebuild
rebuilding	rebuild
rebuilds	rebuild
recalled	recall
recalling	recall
recalls	recall
received	receive
receives	receive
receiving	receive
recessions	recession
recognitions	recognition
recognized	recognize
recognizes	recognize
recognizing	recognize
recommended	recommend
recommending	recommend
recommends	recommend
recorded	record
recording	record
records	record
recovered	recover
recoveries	recovery
recovering	recover
recovers	recover
recruited	recruit
recruiting	recruit
recruits	recruit
reduced	reduce
reduces	reduce
reducing	reduce
referendums	referendum
referred	refer
referring	refer
refers	refer
reflected	reflect
reflecting	reflect
reflects	reflect
reforms	reform
refugees	refugee
refused	refuse
refuses	refuse
refusing	refuse
regained	regain
regaining	regain
regains	regain
regarded	regard
regarding	regard
regards	regard
regimes	regime
regions	region
registered	register
registering	register
registers	register
regrets	regret
regretted	regret
regretting	regret
regulated	regulate
regulates	regulate
regulating	regulate
regulations	regulation
regulators	regulator
reiterated	reiterate
reiterates	reiterate
reiterating	reiterate
rejected	reject
rejecting	reject
rejects	reject
related	relate
relates	relate
relating	relate
relations	relation
relationships	relationship
released	release
releases	release
releasing	release
relied	rely
reliefs	relief
relies	rely
religions	religion
relocated	relocate
relocates	relocate
relocating	relocate
relying	rely
remained	remain
remaining	remain
remains	remain
remarked	remark
remarking	remark
remarks	remark
remembered	remember
remembering	remember
remembers	remember
reminded	remind
reminding	remind
reminds	remind
removed	remove
removes	remove
removing	remove
renewed	renew
renewing	renew
renews	renew
reopened	reopen
reopening	reopen
reopens	reopen
repaired	repair
repairing	repair
repairs	repair
repeated	repeat
repeating	repeat
repeats	repeat
replaced	replace
replaces	replace
replacing	replace
replied	reply
replies	reply
replying	reply
reported	report
reporters	reporter
reporting	report
reports	report
represented	represent
representing	represent
represents	represent
republics	republic
reputations	reputation
requested	request
requesting	request
requests	request
required	require
requirements	requirement
requires	require
requiring	require
rescued	rescue
rescues	rescue
rescuing	rescue
researchers	researcher
researches	research
reserves	reserve
residences	residence
residents	resident
resignations	resignation
resigned	resign
resigning	resign
resigns	resign
resistances	resistance
resisted	resist
resisting	resist
resists	resist
resolutions	resolution
resolved	resolve
resolves	resolve
resolving	resolve
resorts	resort
resources	resource
respected	respect
respecting	respect
respects	respect
responded	respond
responding	respond
responds	respond
responses	response
responsibilities	responsibility
restaurants	restaurant
restored	restore
restores	restore
restoring	restore
restricted	restrict
restricting	restrict
restricts	restrict
rests	rest
resulted	result
resulting	result
results	result
resumed	resume
resumes	resume
resuming	resume
retained	retain
retaining	retain
retains	retain
retaliated	retaliate
retaliates	retaliate
retaliating	retaliate
retired	retire
retires	retire
retiring	retire
retreated	retreat
retreating	retreat
retreats	retreat
returned	return
returning	return
returns	return
revealed	reveal
revealing	reveal
reveals	reveal
revenges	revenge
revenues	revenue
reviewed	review
reviewing	review
reviews	review
revised	revise
revises	revise
revising	revise
revived	revive
revives	revive
reviving	revive
revolutions	revolution
rewarded	reward
rewarding	reward
rewards	reward
rhetorics	rhetoric
rices	rice
ridden	ride
rides	ride
riding	ride
rifles	rifle
rights	right
ringing	ring
rings	ring
riots	riot
risen	rise
rises	rise
rising	rise
risks	risk
rivals	rival
rivers	river
roads	road
rockets	rocket
rocks	rock
rode	ride
roles	role
roofs	roof
rooms	room
roots	root
rose	rise
rotations	rotation
rounds	round
routes	route
routines	routine
ruled	rule
rules	rule
ruling	rule
rulings	ruling
rumors	rumor
rung	ring
running	run
runs	run
rushed	rush
rushes	rush
rushing	rush
sabotages	sabotage
safeties	safety
said	say
sales	sale
samples	sample
sanctioned	sanction
sanctioning	sanction
sanctions	sanction
sands	sand
sang	sing
sank	sink
sat	sit
satellites	satellite
saved	save
saves	save
saving	save
saw	see
saying	say
says	say
scales	scale
scandals	scandal
scaned	scan
scaning	scan
scans	scan
scenarios	scenario
scenes	scene
scheduled	schedule
schedules	schedule
scheduling	schedule
schemes	scheme
scholars	scholar
schools	school
sciences	science
scientists	scientist
scored	score
scores	score
scoring	score
sealed	seal
sealing	seal
seals	seal
searched	search
searches	search
searching	search
seas	sea
seasons	season
seats	seat
seconds	second
secretaries	secretary
secrets	secret
sections	section
sectors	sector
secured	secure
secures	secure
securing	secure
securities	security
seeing	see
seeking	seek
seeks	seek
seemed	seem
seeming	seem
seems	seem
seen	see
sees	see
seized	seize
seizes	seize
seizing	seize
seizures	seizure
selections	selection
selling	sell
sells	sell
selves	self
senates	senate
senators	senator
sending	send
sends	send
senses	sense
sent	send
sentenced	sentence
sentences	sentence
sentencing	sentence
separated	separate
separates	separate
separating	separate
sergeants	sergeant
series	series
serieses	series
served	serve
serves	serve
services	service
serving	serve
sessions	session
sets	set
setting	set
settled	settle
settlements	settlement
settles	settle
settling	settle
shaken	shake
shakes	shake
shaking	shake
shapes	shape
shared	share
shares	share
sharing	share
shelled	shell
shelling	shell
shells	shell
shelters	shelter
shelves	shelf
shifted	shift
shifting	shift
shifts	shift
shines	shine
shining	shine
shipments	shipment
ships	ship
shocked	shock
shocking	shock
shocks	shock
shoes	shoe
shone	shine
shook	shake
shooting	shoot
shootings	shooting
shoots	shoot
shops	shop
shores	shore
shortages	shortage
shot	shoot
shots	shot
shoulders	shoulder
shouted	shout
shouting	shout
shouts	shout
showed	show
showing	show
shown	show
shows	show
shrank	shrink
shrinking	shrink
shrinks	shrink
shrunk	shrink
shuts	shut
shutting	shut
sides	side
sieges	siege
sights	sight
signaled	signal
signaling	signal
signals	signal
signatures	signature
signed	sign
signing	sign
signs	sign
silences	silence
singers	singer
singing	sing
sings	sing
sinking	sink
sinks	sink
sisters	sister
sites	site
sits	sit
sitting	sit
situations	situation
sizes	size
skies	sky
skills	skill
slammed	slam
slamming	slam
slams	slam
sleeping	sleep
sleeps	sleep
slept	sleep
slid	slide
slides	slide
sliding	slide
slogans	slogan
smashed	smash
smashes	smash
smashing	smash
smiled	smile
smiles	smile
smiling	smile
smokes	smoke
snows	snow
societies	society
softwares	software
soils	soil
sold	sell
soldiers	soldier
solutions	solution
songs	song
sons	son
sorts	sort
sought	seek
sounded	sound
sounding	sound
sounds	sound
sources	source
souths	south
spaces	space
sparked	spark
sparking	spark
sparks	spark
speakers	speaker
speaking	speak
speaks	speak
species	species
speeches	speech
speeds	speed
spending	spend
spendings	spending
spends	spend
spent	spend
spheres	sphere
spinning	spin
spins	spin
spirits	spirit
spoke	speak
spoken	speak
spokesmans	spokesman
spokespersons	spokesperson
spokeswomans	spokeswoman
sponsored	sponsor
sponsoring	sponsor
sponsors	sponsor
sports	sport
spots	spot
spreading	spread
spreads	spread
springs	spring
spun	spin
spurred	spur
spurring	spur
spurs	spur
squares	square
stabilities	stability
stabilized	stabilize
stabilizes	stabilize
stabilizing	stabilize
stadiums	stadium
staged	stage
stages	stage
staging	stage
stakes	stake
standards	standard
standing	stand
standoffs	standoff
stands	stand
stars	star
started	start
starting	start
starts	start
starved	starve
starves	starve
starving	starve
stated	state
statements	statement
states	state
stating	state
stations	station
statistics	statistic
statuses	status
stayed	stay
staying	stay
stays	stay
stealing	steal
steals	steal
steels	steel
stemmed	stem
stemming	stem
stems	stem
stepped	step
stepping	step
steps	step
sticking	stick
sticks	stick
stinging	sting
stings	sting
stocks	stock
stole	steal
stolen	steal
stones	stone
stood	stand
stopped	stop
stopping	stop
stops	stop
stores	store
stories	story
stormed	storm
storming	storm
storms	storm
strained	strain
straining	strain
strains	strain
strategies	strategy
streams	stream
streets	street
strengthened	strengthen
strengthening	strengthen
strengthens	strengthen
strengths	strength
stressed	stress
stresses	stress
stressing	stress
stretched	stretch
stretches	stretch
stretching	stretch
strikes	strike
striking	strike
struck	strike
structures	structure
struggled	struggle
struggles	struggle
struggling	struggle
stuck	stick
students	student
studied	study
studies	study
studying	study
stung	sting
styles	style
subjects	subject
submarines	submarine
submits	submit
submitted	submit
submitting	submit
subsidies	subsidy
suburbs	suburb
subways	subway
succeeded	succeed
succeeding	succeed
succeeds	succeed
successes	success
suffered	suffer
suffering	suffer
suffers	suffer
suggested	suggest
suggesting	suggest
suggests	suggest
summers	summer
summits	summit
summoned	summon
summoning	summon
summons	summon
sung	sing
sunk	sink
suns	sun
supplied	supply
supplies	supply
supplying	supply
supported	support
supporters	supporter
supporting	support
supports	support
suppressed	suppress
suppresses	suppress
suppressing	suppress
surfaces	surface
surged	surge
surges	surge
surging	surge
surpluses	surplus
surprises	surprise
surrounded	surround
surrounding	surround
surrounds	surround
surveillances	surveillance
surveys	survey
survived	survive
survives	survive
surviving	survive
survivors	survivor
suspected	suspect
suspecting	suspect
suspects	suspect
suspended	suspend
suspending	suspend
suspends	suspend
suspensions	suspension
sustained	sustain
sustaining	sustain
sustains	sustain
swam	swim
swearing	swear
swears	swear
sweeping	sweep
sweeps	sweep
swept	sweep
swimming	swim
swims	swim
swinging	swing
swings	swing
swore	swear
sworn	swear
swum	swim
swung	swing
symbols	symbol
sympathies	sympathy
symptoms	symptom
systems	system
tables	table
tactics	tactic
tails	tail
taken	take
takes	take
taking	take
talked	talk
talking	talk
talks	talk
tanks	tank
targeted	target
targeting	target
targets	target
tariffs	tariff
tasks	task
taught	teach
taxed	tax
taxes	tax
taxing	tax
taxis	taxi
teachers	teacher
teaches	teach
teaching	teach
teams	team
tearing	tear
tears	tear
teas	tea
technologies	technology
teens	teen
teeth	tooth
telephones	telephone
televisions	television
telling	tell
tells	tell
temperatures	temperature
temples	temple
tennis	tennis
tensions	tension
tents	tent
terminals	terminal
terminated	terminate
terminates	terminate
terminating	terminate
terms	term
territories	territory
terrorisms	terrorism
terrorists	terrorist
terrors	terror
tested	test
testified	testify
testifies	testify
testifying	testify
testimonies	testimony
testing	test
tests	test
texts	text
thanked	thank
thanking	thank
thanks	thank
theaters	theater
themes	theme
theories	theory
therapies	therapy
theses	thesis
thieves	thief
things	thing
thinking	think
thinks	think
thought	think
thoughts	thought
threatened	threaten
threatening	threaten
threatens	threaten
threats	threat
threw	throw
thrones	throne
throwing	throw
thrown	throw
throws	throw
tickets	ticket
tides	tide
tightened	tighten
tightening	tighten
tightens	tighten
timed	time
times	time
timing	time
tips	tip
tissues	tissue
titles	title
todays	today
toes	toe
told	tell
tomatoes	tomato
tones	tone
tons	ton
took	take
tools	tool
topics	topic
topped	top
topping	top
toppled	topple
topples	topple
toppling	topple
tops	top
tore	tear
torn	tear
tornados	tornado
torpedoes	torpedo
tortured	torture
tortures	torture
torturing	torture
totaled	total
totaling	total
totals	total
touched	touch
touches	touch
touching	touch
toured	tour
touring	tour
tourisms	tourism
tourists	tourist
tours	tour
towers	tower
towns	town
traces	trace
tracked	track
tracking	track
tracks	track
traded	trade
trades	trade
trading	trade
traditions	tradition
traffics	traffic
tragedies	tragedy
trails	trail
trained	train
training	train
trainings	training
trains	train
transactions	transaction
transcripts	transcript
transferred	transfer
transferring	transfer
transfers	transfer
transformed	transform
transforming	transform
transforms	transform
transitions	transition
transits	transit
translated	translate
translates	translate
translating	translate
transportations	transportation
transported	transport
transporting	transport
transports	transport
traumas	trauma
traveled	travel
traveling	travel
travels	travel
treasuries	treasury
treated	treat
treaties	treaty
treating	treat
treatments	treatment
treats	treat
trends	trend
trials	trial
tribes	tribe
tribunals	tribunal
tried	try
tries	try
triggered	trigger
triggering	trigger
triggers	trigger
trips	trip
troops	troop
troubles	trouble
truces	truce
trucks	truck
trusted	trust
trusting	trust
trusts	trust
truths	truth
trying	try
tunnels	tunnel
turned	turn
turning	turn
turnouts	turnout
turns	turn
types	type
uncertainties	uncertainty
undergoes	undergo
undergoing	undergo
undergone	undergo
undermined	undermine
undermines	undermine
undermining	undermine
understanding	understand
understands	understand
understood	understand
undertaken	undertake
undertakes	undertake
undertaking	undertake
undertook	undertake
underwent	undergo
unfolded	unfold
unfolding	unfold
unfolds	unfold
unified	unify
unifies	unify
uniforms	uniform
unifying	unify
unions	union
united	unite
unites	unite
unities	unity
uniting	unite
units	unit
universities	university
unveiled	unveil
unveiling	unveil
unveils	unveil
updated	update
updates	update
updating	update
upgraded	upgrade
upgrades	upgrade
upgrading	upgrade
upheld	uphold
upholding	uphold
upholds	uphold
uprisings	uprising
uraniums	uranium
urged	urge
urges	urge
urging	urge
usages	usage
used	use
users	user
uses	use
using	use
vaccines	vaccine
valued	value
values	value
valuing	value
vans	van
varieties	variety
vehicles	vehicle
vendors	vendor
verified	verify
verifies	verify
verifying	verify
versions	version
vertices	vertex
vessels	vessel
veterans	veteran
vetoed	veto
vetoes	veto
vetoing	veto
victims	victim
victories	victory
videos	video
viewed	view
viewing	view
views	view
villages	village
violated	violate
violates	violate
violating	violate
violations	violation
violences	violence
viruses	virus
visas	visa
visions	vision
visited	visit
visiting	visit
visitors	visitor
visits	visit
voiced	voice
voices	voice
voicing	voice
volcanoes	volcano
volumes	volume
volunteers	volunteer
voted	vote
voters	voter
votes	vote
voting	vote
vowed	vow
vowing	vow
vows	vow
wages	wage
waited	wait
waiting	wait
waits	wait
wakes	wake
waking	wake
wales	wale
walked	walk
walking	walk
walks	walk
walls	wall
wanted	want
wanting	want
wants	want
warfares	warfare
warheads	warhead
warned	warn
warning	warn
warnings	warning
warns	warn
warrants	warrant
wars	war
was	be
washed	wash
washes	wash
washing	wash
wastes	waste
watched	watch
watches	watch
watching	watch
waters	water
waved	wave
waves	wave
waving	wave
ways	way
weakened	weaken
weakening	weaken
weakens	weaken
weaknesses	weakness
wealths	wealth
weapons	weapon
wearing	wear
wears	wear
weathers	weather
webs	web
websites	website
weekends	weekend
weeks	week
weeping	weep
weeps	weep
weighed	weigh
weighing	weigh
weighs	weigh
weights	weight
welcomed	welcome
welcomes	welcome
welcoming	welcome
welfares	welfare
went	go
wept	weep
wests	west
wheats	wheat
wheels	wheel
widened	widen
widening	widen
widens	widen
widows	widow
widths	width
windows	window
winds	wind
winners	winner
winning	win
wins	win
winters	winter
wires	wire
wisdoms	wisdom
wished	wish
wishes	wish
wishing	wish
withdrawing	withdraw
withdrawn	withdraw
withdraws	withdraw
withdrew	withdraw
witnessed	witness
witnesses	witness
witnessing	witness
wives	wife
woke	wake
woken	wake
wolves	wolf
womans	woman
women	woman
won	win
wondered	wonder
wondering	wonder
wonders	wonder
words	word
wore	wear
worked	work
workers	worker
workforces	workforce
working	work
works	work
workshops	workshop
worlds	world
worn	wear
worried	worry
worries	worry
worrying	worry
worships	worship
wounded	wound
wounding	wound
wounds	wound
wrapped	wrap
wrapping	wrap
wraps	wrap
wrecks	wreck
writers	writer
writes	write
writing	write
written	write
wrote	write
years	year
yielded	yield
yielding	yield
yields	yield
youths	youth
zones	zone
)NTDATA";

}  // namespace ntopo::data
