#!/usr/bin/env python3
"""Generates the bundled demo resources under data/.

Everything is synthetic and deterministic: template sentences cycle through
fixed vocabulary banks so that every word type occurs at least twice, with a
set of anchor sentences pinning the collocations the example puns rely on
(grand slam, good morning, aa bail mujhe maar, phir bhi dil hai hindustani).
Run from the repository root:

    python3 tools/gen_data.py
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data")

TARGET_SENTENCES = 21000
MIN_ENGLISH_TYPES = 5200
MIN_HINDI_PAIRS = 5200

# ---------------------------------------------------------------------------
# English vocabulary banks
# ---------------------------------------------------------------------------

NOUNS = """
team match player season captain coach stadium crowd ticket victory defeat
innings wicket bowler batsman umpire referee goal score board league trophy
tournament final semifinal medal record sprint race runner track field court
racket paddle net serve rally set point game bat ball glove helmet jersey
film actor actress director producer singer dancer song album script scene
camera studio theatre screen audience critic review award ceremony festival
channel serial episode anchor reporter newspaper magazine column headline
editor press interview statement speech debate parliament minister leader
party election vote voter booth campaign policy budget tax scheme bill law
court judge lawyer police officer case verdict appeal prison border treaty
embassy visa passport flight airport train station platform bus road bridge
tunnel highway traffic signal driver passenger journey trip tour hotel room
kitchen garden balcony window door roof wall floor stair lamp table chair
sofa bed pillow blanket curtain mirror clock watch phone laptop computer
keyboard mouse printer cable charger battery camera2 radio speaker market
shop store mall price discount offer customer seller buyer bargain billing
wallet purse coin note rupee dollar bank account loan interest deposit
branch manager clerk queue counter form receipt parcel letter stamp card
gift box bag basket bottle glass cup plate bowl spoon fork knife pan pot
stove oven fridge milk butter cheese bread rice wheat flour sugar salt
pepper spice chilli onion garlic ginger tomato potato carrot spinach peas
bean lemon mango banana apple orange grape papaya melon coconut almond
cashew raisin biscuit cake pastry sweet dessert snack lunch dinner
breakfast meal feast recipe dish curry gravy pickle salad soup juice tea
coffee water ice cloud rain storm thunder wind breeze heat summer winter
monsoon spring autumn morning2 evening2 night midnight noon dawn dusk sky
star moon sun planet earth river lake pond sea ocean wave beach island
mountain hill valley forest tree leaf branch2 root flower petal grass seed
soil stone rock sand dust mud path trail village town city street lane
colony sector block tower flat house home family parent mother father son
daughter brother sister uncle aunt cousin nephew niece grandfather
grandmother husband wife friend neighbour guest stranger child infant
toddler student teacher principal school college university classroom
lecture lesson homework exam result marks grade degree diploma library
book page chapter story poem novel author writer reader dictionary word
sentence paragraph letter2 alphabet language grammar meaning question
answer doubt idea thought memory dream plan goal2 habit routine schedule
calendar date week month year decade century moment minute hour second
doctor nurse patient2 hospital clinic medicine tablet syrup injection
fever cough cold2 pain wound bandage surgery therapy diet exercise yoga
walk2 jog gym muscle bone skin hair eye ear nose mouth tooth tongue lip
cheek chin neck shoulder arm elbow wrist palm finger thumb nail chest
waist hip knee ankle foot toe heart lung liver kidney brain nerve blood
engineer mechanic plumber carpenter painter tailor barber farmer labourer
worker2 artist poet2 musician scientist researcher professor economist
historian pilot sailor soldier guard driver2 conductor vendor hawker
businessman trader merchant investor partner2 colleague boss staff salary
wage bonus pension office desk file folder document register meeting
project deadline target2 report2 presentation chart graph data2 figure
number total2 average percent fraction half quarter dozen pair2 group
crowd2 queue2 line2 row2 circle square triangle corner edge side2 surface
shape size colour paint brush canvas sketch drawing design pattern fabric
cotton silk wool thread needle button pocket collar sleeve shirt trouser
jacket coat2 sweater scarf cap hat shoe sandal slipper sock belt ring
chain necklace bangle earring bracelet gem pearl diamond gold2 silver
copper iron steel metal plastic rubber paper cardboard wood glass2 brick
cement factory machine engine motor wheel tyre brake gear clutch mirror2
horn seat bonnet truck lorry tractor scooter cycle rickshaw boat ship
anchor2 sail mast deck cargo port harbour dock crane warehouse supply
demand growth economy inflation industry sector2 export import revenue
profit loss share stock dividend merger startup venture capital fund
investor2 audit balance2 budget2 invoice
""".split()

VERBS_REGULAR = """
walk talk play call wait watch look listen open close start finish work
help ask answer2 visit stay move turn push pull lift drop pick carry clean
wash cook serve2 taste smell touch count add subtract multiply divide
measure weigh pack unpack load unload deliver collect gather arrange
decorate paint2 colour2 sketch2 design2 stitch iron2 fold  dust 
mop scrub rinse dry2 boil fry roast bake grill steam chop slice peel grate
mix stir pour fill empty2 cover uncover wrap seal post2 mail print scan
type delete save2 search browse download upload install update restart
repair fix2 check test2 verify compare match2 sort filter group2 label
mark2 sign2 stamp2 approve reject submit request offer2 accept decline
invite welcome2 greet thank apologise forgive remind remember 
learn2 teach2 train2 practise practice improve achieve attempt try manage
plan2 prepare organise attend join  arrive depart travel2 return
follow  guide direct2 instruct explain describe discuss argue agree
disagree suggest propose decide select  prefer like2 love2 enjoy
admire respect praise blame criticise complain protest demand2 claim
promise assure confirm deny admit confess reveal  share2 borrow 
owe  earn  waste2 invest donate contribute support2 defend
protect guard2 rescue warn alert inform notify announce declare report3
record2 note2 list2 mention quote refer cite translate interpret summarise
review2 edit revise publish release2 launch promote advertise market2
brand2 package2 ship2 export2 import2 trade2 exchange bargain2 negotiate
""".split()

NOUNS2 = """
morning3 evening3 noon2 midday weekend holiday vacation picnic outing camp
tent torch rope ladder bucket mug jug tap pipe drain tank well pump motor2
generator inverter switch socket plug bulb tube fan cooler heater geyser
boiler furnace chimney stove2 gasoline diesel petrol kerosene coal charcoal
flame spark ash smoke2 vapor steam2 humidity moisture dew frost hail sleet
snowfall rainfall drought flood earthquake landslide avalanche cyclone
hurricane tornado eclipse comet meteor asteroid galaxy universe gravity
orbit satellite rocket shuttle capsule antenna radar sonar laser sensor
circuit chip processor memory2 storage disk drive2 server network router
modem signal2 bandwidth website portal forum blog post3 comment profile
account2 password username login logout session cookie browser tab2 window2
folder2 archive backup restore2 virus firewall spam filter2 inbox outbox
draft2 attachment download2 upload2 stream2 video audio podcast playlist
volume2 pitch tone rhythm melody harmony chord note3 scale2 octave lyric
verse chorus stanza rhyme2 meter2 drama comedy tragedy satire irony humour
joke pun riddle puzzle crossword quiz trivia fact fiction myth legend fable
proverb idiom phrase clause syllable vowel consonant accent dialect slang
jargon glossary index2 appendix preface footnote margin2 font italic bold
underline bullet2 heading caption diagram map2 atlas globe compass scale3
ruler2 pencil eraser sharpener crayon marker2 chalk duster easel palette
pigment dye ink quill parchment scroll manuscript print2 edition volume3
series2 sequel prequel trilogy saga epic2 ballad sonnet ode elegy hymn
prayer chant mantra sermon scripture temple2 shrine altar idol priest monk
nun pilgrim devotee ritual custom tradition heritage culture2 civilisation
empire2 dynasty kingdom republic democracy monarchy colony2 province
district tehsil panchayat municipality corporation2 council committee
commission bureau agency department ministry2 secretariat cabinet senate
assembly quorum motion2 amendment clause2 statute ordinance decree charter
constitution2 preamble article2 section2 paragraph2 subsection provision
penalty fine2 sentence2 custody parole probation bailiff warrant summons
affidavit testimony witness2 evidence exhibit2 plaintiff defendant jury
prosecutor attorney notary deed lease rent tenant landlord mortgage broker
agent2 commission2 premium2 claim2 settlement2 compensation damages refund
rebate subsidy grant2 scholarship stipend allowance overtime increment
promotion2 transfer2 resignation retirement gratuity provident nominee
insurance2 actuary underwriter ledger journal2 voucher receipt2 cheque
draft3 remittance wire2 transaction currency forex bullion ingot mint2
treasury fiscal deficit surplus quota tariff duty2 levy cess excise octroi
customs2 freight logistics inventory2 stockpile surplus2 shortage scarcity
abundance plenty2 famine harvest2 sowing reaping threshing winnowing
granary silo barn stable2 pasture meadow orchard vineyard nursery2
greenhouse sapling bud2 thorn bark2 trunk2 twig foliage canopy undergrowth
shrub bush hedge creeper vine ivy moss fern algae fungus mushroom bamboo
cane reed husk bran chaff straw hay fodder manure compost mulch pesticide
herbicide irrigation canal2 sluice dam reservoir aqueduct embankment levee
delta estuary lagoon marsh swamp bog creek brook stream3 rapids waterfall
cascade spring2 geyser2 glacier iceberg fjord cliff gorge canyon2 plateau
plain4 prairie savanna steppe tundra desert oasis dune mirage horizon
equator hemisphere latitude longitude meridian altitude sealevel terrain
landscape scenery vista panorama outlook2 viewpoint landmark monument2
memorial statue plaque fountain2 pavilion gazebo arch2 dome minaret spire
turret rampart moat drawbridge citadel fortress garrison barracks armory
arsenal cannon musket rifle pistol bullet3 shell2 grenade missile torpedo
submarine destroyer frigate carrier2 convoy fleet admiral general2 colonel
major2 sergeant corporal private2 recruit veteran casualty ceasefire truce
armistice alliance2 coalition summit2 delegation envoy ambassador consulate
protocol2 accord pact2 sanction embargo blockade siege2 invasion retreat2
surrender2 victory2 conquest liberation independence partition migration
refugee asylum2 citizenship census demography population2 literacy
mortality fertility epidemic pandemic vaccine serum antibody antigen
bacteria microbe parasite protein vitamin mineral2 calcium iodine glucose
insulin hormone enzyme tissue2 cell2 nucleus membrane chromosome gene
genome heredity mutation species habitat ecosystem biodiversity extinction
conservation sanctuary2 reserve2 safari zoology botany geology archaeology
anthropology psychology philosophy logic2 ethics aesthetics rhetoric
""".split()

VERBS2_REGULAR = """
jump climb crawl hop skip march stroll wander roam drift float2  dive
 paddle row2 sail2 steer dock2 land2 crash skid  glide bounce
roll  twist  stretch fold2 snap crack   rip shred crush
 pound hammer drill bore carve chisel mold  weld solder rivet
bolt screw nail2 glue paste tape2 staple clip pin2 hook latch lock2 unlock
bolt2 chain2 tie untie knot lace strap buckle zip unzip button2 fasten
loosen tighten squeeze press2 pinch grip grasp clutch2 snatch grab yank
tug drag haul heave hoist raise2 lower2 dip plunge soak drench splash
sprinkle spray squirt drip trickle ooze leak seep flow gush spout erupt
overflow flood2 swell  expand contract2 inflate deflate stretch2
compress condense evaporate  melt thaw simmer scald toast2 scorch
char singe burn2 ignite kindle extinguish douse smother suffocate choke
gasp pant wheeze sigh yawn sneeze hiccup snore whistle hum2 chant2 groan
moan wail sob  whimper giggle chuckle grin smirk frown scowl glare
stare gaze glance peek peep squint blink wink nod  shrug bow2 kneel
crouch squat lean2 slouch stumble trip2 slip2 tumble topple collapse faint
recover revive heal cure nurse2 soothe comfort2 console encourage motivate
inspire uplift cheer applaud clap whistle2 boo heckle jeer mock tease
taunt insult offend provoke irritate annoy pester nag scold rebuke
reprimand punish2 penalise fine3 suspend expel banish exile deport evict
oust dethrone crown2 enthrone anoint bless curse2 haunt possess2 exorcise
worship2 revere idolise adore cherish treasure2 value2 esteem honour2
dishonour shame2 disgrace humiliate embarrass fluster bewilder confuse
perplex puzzle2 baffle mystify intrigue fascinate captivate enchant charm2
dazzle impress2 astonish astound amaze stun shock2 startle frighten scare
terrify horrify appal disgust repel revolt2 sicken nauseate bore2 weary
tire2 exhaust drain2 deplete replenish refill restock restore3 renovate
refurbish remodel redesign rebuild2 reconstruct repave resurface repaint
redecorate furnish equip2 outfit2 supply2 provision2 stock2 store2 hoard
stash2 bury2 unearth excavate  tunnel2 mine2 quarry2 extract refine
smelt forge2 temper2 anneal polish2 buff burnish varnish lacquer glaze
enamel plate2 gild coat3 laminate insulate soundproof waterproof
fireproof reinforce strengthen fortify brace2 prop2 scaffold shore2
anchor3 moor berth harbor2 shelter2 shield2 screen2 veil mask2 cloak
disguise camouflage conceal obscure shroud envelop encase enclose encircle
surround besiege corner2 trap2 ensnare ambush waylay intercept apprehend
arrest2 detain confine imprison incarcerate shackle handcuff manacle
liberate free3 unshackle parole2 pardon2 acquit exonerate vindicate
absolve justify2 excuse2 condone overlook2 ignore disregard neglect omit
skip2 bypass2 sidestep evade dodge elude escape2  bolt3 scamper
scurry dart2 dash bolt4 sprint2 gallop trot canter amble saunter
""".split()

ADJ2 = """
abrupt absent2 absolute abstract absurd abundant academic acceptable
accurate acidic acoustic adamant adaptive adequate adjustable admirable
adorable adventurous adverse aerial affordable ageless aggressive agile
agreeable alarming alert2 algebraic alien alike alive alkaline alternate
ambitious ample amusing analog angular animated annualised anonymous
antique anxious2 apparent appealing applicable appreciative appropriate
apt aquatic arbitrary arctic arid aristocratic aromatic artistic ashamed
asleep aspiring assertive astute athletic atomic attentive attractive
audacious austere authentic automated autonomous available2 awake awful
awkward2 bacterial balanced bare barren bashful beloved
beneficial benign bilingual bitter2 bizarre blank blessed blissful bogus
boiling boundless bountiful breezy brief brilliant brisk brittle broad
broken bronze bulky bumpy buoyant bureaucratic burnt bushy buttery
cautious celestial ceramic cerebral changeable chaotic charming
chatty cheerful chewy chilly2 chivalrous choosy chronic chubby chunky
cinematic circular civic civil classical clinical cluttered coarse coastal
cognitive coherent cohesive colonial colorful colossal comic commendable
compact comparable compassionate competent competitive complacent
compliant composite comprehensive concise concrete condensed confident
congested conscious consecutive conservative considerable consistent
constant contagious contemporary contextual continual continuous
controversial conventional cordial corporate corrosive cosmetic cosmic
courteous cozy crafty cramped cranky creamy creative credible crisp
critical crooked crude crunchy cryptic crystalline cubic
culinary cultural cumbersome curious curly current2 cursive curved
customary cynical dainty damp2 daring dashing dazzling decent decisive
decorative dedicated defective defensive defiant deficient definite
deliberate delicate delightful dependable dependent descriptive deserted
desirable desperate destructive detailed devoted diagonal didactic
dietary different diligent dim2 diplomatic dire disciplined discreet
dismal disposable disputed distinct distinguished diverse divine dizzy
docile documentary domestic dominant dormant doubtful downward dramatic
drastic dreadful dreamy drowsy dual dubious ductile durable dusty dutiful
dynamic eclectic ecological economical ecstatic edible educational eerie
effective efficient elaborate elastic elated elderly electoral elemental
elevated eligible eloquent elusive eminent emphatic empirical enchanting
endless enduring energetic enormous enthusiastic envious equable
erratic eternal ethical ethnic euphoric evergreen evident
exotic expansive experimental explicit explosive expressive
exquisite extensive external extravagant fabulous faint2 fancy fantastic
fatal faulty favorable fearful feasible federal feeble fertile
fierce fiery figurative filthy fiscal2 flaky flamboyant flashy flawless
flexible flimsy fluent fluffy fluid folksy foolproof forceful forgetful
formidable fragile fragrant2 frank frantic frugal fruitful fulsome
functional fundamental furious furry futile futuristic fuzzy gallant
gaseous gaudy genetic genial genuine2 geometric ghostly gifted gigantic
glamorous gleaming glorious glossy golden gorgeous graceful2 gracious
grammatical grandiose graphic grateful2 grave2 greasy greedy grim grimy
gritty grumpy gullible gusty hairy handy hardy harmless harmonious harsh
hasty hazardous hazy heartfelt hearty heavenly hectic heroic
hesitant hidden hilarious hollow2 homely honorable horizontal2 hospitable
huge humane humorous hygienic hypothetical iconic ideal identical idle2
idyllic imaginative immaculate immense imminent immune impartial
impatient imperial implicit impolite imported impressive improper
impulsive inactive inadequate incidental inclusive indirect indigenous
indoor industrious inevitable infamous infinite influential informative
ingenious inherent initial innate innocent innovative inquisitive insane
insightful instant instinctive institutional instructive insufficient
intact integral intellectual intelligent intense2 intentional interactive
interim internal2 intimate intricate intrinsic intuitive inventive
inverse invincible inviting ironic irregular irresistible isolated
jagged jovial jubilant judicial juicy jumbo junior just2 juvenile keen2
kinetic knotty lavish lawful leafy lean3 legendary legible legislative
legitimate leisurely lenient lethal liberal lifelike lifelong limber
limitless linear linguistic liquid2 literary lively livid logical lonely
lopsided lucid lucky luminous lush luxurious lyrical magical magnetic
magnificent majestic mammoth mandatory marble2 marginal marine
marvelous massive mature meaningful meek mellow melodic memorable menial
merciful merry metabolic metallic methodical meticulous mighty milky
mindful miniature minimal miraculous mischievous miserable misty2 mobile
modest moist2 molecular momentary monumental mossy motionless mountainous
movable muddy muffled multiple mundane municipal2 muscular musical mute
mutual mysterious mystical mythical narrow2 nasal nautical naval
neighborly nervous2 neutral nifty nimble nocturnal nominal nostalgic
notable noteworthy noticeable novel2 numeric numerous nutritious obedient
objective oblique oblong obscure2 observant obsolete obvious occasional
oceanic odorless offbeat offensive official2 offshore oily onerous opaque
operatic operational opportune optimal optimistic opulent orderly
organic2 ornamental ornate orthodox outdoor outgoing outlandish outright
oval2 overdue overt paternal pathetic patient3 peculiar pedantic pending
pensive perceptive perennial perfect periodic perishable perky perpetual
persistent persuasive pertinent petite phonetic photographic picturesque
pivotal placid plausible playful pleasing plentiful pliable poetic
poignant pointed polar polished2 polite2 political2 porous portable
positive potent powerful practical pragmatic precious precise predictable
premier pressing prestigious pricey primary primitive principal2 pristine
proactive productive proficient profitable profound progressive prominent
prompt prone proper prosperous protective proud3 proverbial prudent
punctual pungent purposeful quaint qualified quantitative quarterly
queasy quirky quotable radiant radical rainy2 rampant random rapid2 rash
rational ravenous realistic reasonable rebellious receptive reciprocal
reckless recognisable rectangular recurrent redundant refined reflective
refreshing regal regional2 regular rehearsed relative relaxed relevant
reliable reluctant2 remarkable remote renewable renowned repetitive
resilient resolute resonant resourceful respectful responsible responsive
restless restorative retroactive reusable reverent rhythmic rigid
rigorous ripe2 risky robust romantic roomy rosy rotary rotten rugged
ruling runny rustic ruthless sacred salty2 sandy sane sanitary sarcastic
satisfying savory scandalous scarce scenic sceptical scholarly scientific
scrawny sculpted seamless seasonal2 secluded secondary secretive secular
secure sedate seismic selective sensible sensitive sentimental serene
severe2 shabby shady shallow2 sheer shiny shrewd silky simplistic
simultaneous skeletal skeptical slick slippery sluggish smoky snug
sociable solar somber soothing sophisticated sparkling spacious spicy2
spirited spiritual2 splendid spontaneous sporadic spotless sprawling
spry stainless stale3 stark stately static statistical statutory
steadfast stealthy stern sticky stiff stimulating stingy stormy2
stout2 straightforward strategic strenuous striking stringent stubby
studious stunning sturdy stylish subdued subjective sublime subsequent
substantial subtle suburban successive succinct succulent sufficient
suggestive sullen sultry sunny2 superb superficial superior supple
supportive supreme surgical2 surplus3 suspicious sustainable swift
symbolic symmetrical synthetic systematic tactful tactical talented
tangible tangy tart taut technical tedious temperate tenacious tender
tentative tepid terminal terrestrial terrific textual textured thankful2
theatrical theoretical thorough thoughtful thrifty thriving tidal tidy2
timeless timely tiresome tolerant tonal torrid tranquil transparent
treacherous tremendous triangular tribal tricky trim2 triumphant tropical
trustworthy truthful turbulent typical ultimate unanimous uncanny uneven
unfamiliar uniform unique2 unruly upbeat upright upscale
urbane usable utter vacant2 vague2 valiant valuable vast velvety
venerable verbose versatile vertical2 viable vibrant vicious victorious
vigilant vigorous vindictive vintage virtuous viscous visual
vivid vocal2 volatile voluntary voluminous voracious vulnerable wary
wasteful watchful watery wavy weary2 weekly2 weighty whimsical wholesale
wholesome wicked wild willful windy2 winsome wiry wistful witty2 wobbly
woeful wooden woolly wordy worldly worthy wretched yearly youthful zesty
""".split()

VERBS_IRREGULAR = {
    # base: (third, past, participle/ing)
    "run": ("runs", "ran", "running"),
    "sit": ("sits", "sat", "sitting"),
    "stand": ("stands", "stood", "standing"),
    "win": ("wins", "won", "winning"),
    "lose": ("loses", "lost", "losing"),
    "write": ("writes", "wrote", "writing"),
    "read": ("reads", "read", "reading"),
    "sing": ("sings", "sang", "singing"),
    "bring": ("brings", "brought", "bringing"),
    "buy": ("buys", "bought", "buying"),
    "sell": ("sells", "sold", "selling"),
    "make": ("makes", "made", "making"),
    "take": ("takes", "took", "taking"),
    "give": ("gives", "gave", "giving"),
    "find": ("finds", "found", "finding"),
    "keep": ("keeps", "kept", "keeping"),
    "hold": ("holds", "held", "holding"),
    "tell": ("tells", "told", "telling"),
    "say": ("says", "said", "saying"),
    "see": ("sees", "saw", "seeing"),
    "meet": ("meets", "met", "meeting2"),
    "leave": ("leaves", "left", "leaving"),
    "feel": ("feels", "felt", "feeling"),
    "drive": ("drives", "drove", "driving"),
    "ride": ("rides", "rode", "riding"),
    "eat": ("eats", "ate", "eating"),
    "drink": ("drinks", "drank", "drinking"),
    "sleep": ("sleeps", "slept", "sleeping"),
    "wake": ("wakes", "woke", "waking"),
    "speak": ("speaks", "spoke", "speaking"),
    "think": ("thinks", "thought2", "thinking"),
    "know": ("knows", "knew", "knowing"),
    "grow": ("grows", "grew", "growing"),
    "throw": ("throws", "threw", "throwing"),
    "catch": ("catches", "caught", "catching"),
    "teach": ("teaches", "taught", "teaching"),
    "build": ("builds", "built", "building"),
    "send": ("sends", "sent", "sending"),
    "spend": ("spends", "spent", "spending"),
    "begin": ("begins", "began", "beginning"),
}

ADJECTIVES = """
big small tall short long wide narrow thick thin heavy light2 strong weak
fast2 quick rapid sudden early late2 new old young fresh stale ripe raw
sweet2 sour bitter salty spicy bland tasty delicious hungry thirsty full2
empty3 open2 closed busy free2 cheap costly expensive rich poor wealthy
humble proud2 brave bold timid shy calm quiet loud noisy silent gentle
rough smooth soft hard easy difficult simple complex clear vague bright
dark dim pale deep shallow high low upper lower inner outer near far2
close2 distant local foreign national international regional rural urban
modern ancient classic popular famous known unknown common rare unique
special ordinary normal strange odd even2 equal unequal fair unfair just
unjust legal illegal valid invalid true false honest dishonest loyal
faithful sincere serious funny witty clever smart wise foolish silly dull
sharp blunt clean2 dirty neat messy tidy untidy dry3 wet damp moist humid
sunny cloudy rainy windy stormy foggy misty chilly cool2 warm hot cold3
frozen mild severe intense extreme moderate slight minor major main chief
prime central middle final2 first last2 next previous former latter single
double triple whole entire complete incomplete partial total3 gross net2
exact rough2 approximate certain uncertain sure unsure ready unready able
unable fit2 unfit healthy sick ill unwell tired fresh2 active idle lazy
eager keen willing reluctant happy sad glad sorry angry upset worried
anxious nervous afraid fearless hopeful hopeless helpful helpless useful
useless careful careless gentle2 polite rude kind2 cruel friendly hostile
generous selfish jealous grateful thankful content2 satisfied pleasant
unpleasant comfortable uncomfortable convenient inconvenient suitable
possible impossible probable likely unlikely necessary optional urgent
important trivial2 crucial vital essential basic advanced beginner expert
skilled unskilled trained untrained educated literate wealthy2 beautiful
pretty handsome ugly plain3 elegant graceful awkward clumsy slim2 slender
stout plump round2 oval flat2 level2 steep gradual vertical horizontal
parallel opposite adjacent joint separate attached detached loose tight
firm stable unstable steady shaky solid liquid hollow dense sparse crowded
vacant occupied reserved available absent present2 visible invisible
audible silent2 fragrant smelly stale2 pure impure natural artificial
genuine fake original duplicate real imaginary actual virtual digital
manual automatic electric electronic mechanical chemical physical mental
emotional spiritual moral social political economic financial commercial
industrial agricultural medical surgical dental verbal written oral formal
informal official unofficial public private personal general particular
specific global universal partial2 temporary permanent annual monthly
weekly daily hourly seasonal festive casual routine2
""".split()

ADVERBS = """
quickly slowly quietly loudly gently firmly easily hardly nearly almost
barely clearly exactly really truly surely certainly probably possibly
usually normally generally frequently often sometimes rarely seldom never
always again soon later earlier today yesterday tomorrow2 here there
everywhere somewhere nowhere inside outside upstairs downstairs ahead
behind2 above below nearby far3 away together alone apart forward backward
onward suddenly gradually finally initially eventually recently currently
already still yet once twice thrice daily2 nightly carefully carelessly
happily sadly angrily calmly bravely politely rudely kindly warmly coldly
brightly dimly deeply highly lowly fully partly mostly mainly chiefly
largely slightly fairly quite rather very too enough indeed perhaps maybe
""".split()

# Words the examples depend on; they get dedicated anchor sentences.
MISC = """
one two three four five six seven eight nine ten eleven twelve twenty
thirty forty fifty sixty seventy eighty ninety hundred thousand million
first2 second2 third fourth fifth sixth seventh eighth ninth tenth
january february march2 april may june july august september october
november december tuesday wednesday thursday friday2 red blue green
yellow pink purple brown black white grey orange2 violet indigo maroon
crimson scarlet azure turquoise beige ivory cream2 golden2 silvery north
south east west northern southern eastern western upward downward2 inward
outward sideways clockwise anticlockwise something nothing anything
everything someone anyone nobody everybody somebody anybody whoever
whatever whenever wherever however moreover therefore meanwhile otherwise
furthermore nevertheless nonetheless besides although though unless until
since2 because while2 whereas weekdays weekends fortnight quarterly2
midnight2 daybreak sunrise sunset twilight overnight alongside underneath
throughout within without toward towards against among amongst between
beyond across around beneath beside despite during except including
regarding concerning per via amid amidst atop onto upon
""".split()

ANCHOR_WORDS = [
    "grand", "slam", "good", "morning", "evening", "zeal", "bail", "proud",
    "fast", "food", "slow", "down", "monday", "sunday", "everyone", "wish",
    "mat", "piano", "total", "canyon", "welcome", "tonight",
]


def dedup(words):
    seen = set()
    out = []
    for w in words:
        w = w.rstrip("0123456789")  # bank suffixes disambiguate duplicates
        if w and w not in seen:
            seen.add(w)
            out.append(w)
    return out


def plural(noun):
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


# Polysyllabic verbs with final-syllable stress double their last consonant.
DOUBLE_FINAL = {"admit", "appal", "expel", "omit", "prefer", "refer", "repel",
                "submit", "unzip", "outfit", "sidestep"}


def _doubles(verb):
    if verb in DOUBLE_FINAL:
        return True
    import re as _re
    one_syllable = len(_re.findall(r"[aeiou]+", verb)) == 1
    cvc = _re.search(r"[^aeiou][aeiou][^aeiouwxy]$", verb) is not None
    return one_syllable and cvc


def verb_forms(verb):
    if verb.endswith("ee"):
        ing = verb + "ing"
        past = verb + "d"
    elif verb.endswith("e"):
        ing = verb[:-1] + "ing"
        past = verb + "d"
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        ing = verb + "ing"
        past = verb[:-1] + "ied"
    elif _doubles(verb):
        ing = verb + verb[-1] + "ing"
        past = verb + verb[-1] + "ed"
    else:
        ing = verb + "ing"
        past = verb + "ed"
    if verb.endswith(("s", "x", "z", "ch", "sh")):
        third = verb + "es"
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        third = verb[:-1] + "ies"
    else:
        third = verb + "s"
    return third, past, ing


class Cycle:
    """Deterministic round-robin over a list, tracking emission counts."""

    def __init__(self, items):
        self.items = list(items)
        self.i = 0
        self.emitted = 0

    def next(self):
        item = self.items[self.i % len(self.items)]
        self.i += 1
        self.emitted += 1
        return item

    def cycles(self):
        return self.i // len(self.items)


def english_corpus():
    nouns = dedup(NOUNS + NOUNS2)
    verbs = dedup(VERBS_REGULAR + VERBS2_REGULAR)
    adjs = dedup(ADJECTIVES + ADJ2)
    advs = dedup(ADVERBS + MISC)

    noun_forms = []
    for n in nouns:
        noun_forms.append(n)
        noun_forms.append(plural(n))
    verb_bank = []  # (third, past, ing)
    for v in verbs:
        third, past, ing = verb_forms(v)
        verb_bank.append((v, third, past, ing))
    for base, (third, past, ing) in VERBS_IRREGULAR.items():
        verb_bank.append(
            (base, third.rstrip("0123456789"), past.rstrip("0123456789"),
             ing.rstrip("0123456789")))

    nounc = Cycle(noun_forms)
    verbc = Cycle(verb_bank)
    adjc = Cycle(adjs)
    advc = Cycle(advs)

    sentences = []

    def sent(words):
        words = [w for w in words if w]
        words[0] = words[0].capitalize()
        sentences.append(" ".join(words))

    # Anchor sentences pin the collocations the bundled puns need. Counts
    # are high enough to survive the unk floor and dominate their contexts.
    anchors = []
    anchors += ["Good morning everyone"] * 14
    anchors += ["We wish you a good morning"] * 8
    anchors += ["Good morning to all our readers"] * 8
    anchors += ["It was a good morning for the team"] * 6
    anchors += ["Good evening to you all"] * 8
    anchors += ["The good news pleased everyone"] * 4
    anchors += ["He won the grand slam yesterday"] * 10
    anchors += ["She won the grand slam final"] * 8
    anchors += ["The grand slam title came home"] * 6
    anchors += ["A grand piano stood in the hall"] * 4
    anchors += ["The grand total surprised the auditors"] * 4
    anchors += ["The grand canyon amazed the visitors"] * 3
    anchors += ["They worked with great zeal"] * 5
    anchors += ["His zeal for cricket was famous"] * 5
    anchors += ["Her zeal impressed the coach"] * 4
    anchors += ["The court granted him bail yesterday"] * 5
    anchors += ["His bail plea was rejected"] * 5
    anchors += ["She was released on bail today"] * 4
    anchors += ["We are proud of you"] * 8
    anchors += ["They felt proud of the team"] * 5
    anchors += ["Fast food is popular among students"] * 8
    anchors += ["They sell fast food near the station"] * 6
    anchors += ["He ordered fast food again"] * 5
    anchors += ["Good food keeps you healthy"] * 5
    anchors += ["The street food here is tasty"] * 5
    anchors += ["Hot food was served to the guests"] * 4
    anchors += ["Fresh food arrived from the farm"] * 4
    anchors += ["Please slow down near the school"] * 6
    anchors += ["You should slow down at the turn"] * 4
    anchors += ["Cars slow down before the bridge"] * 4
    anchors += ["The mat was clean"] * 3
    anchors += ["He left the mat outside"] * 3
    anchors += ["Monday morning traffic was heavy"] * 4
    anchors += ["Sunday morning felt peaceful"] * 4
    anchors += ["This morning brought heavy rain"] * 4
    anchors += ["Tomorrow morning the match begins"] * 3
    anchors += ["Every morning she walks a mile"] * 3
    anchors += ["Welcome to the evening show tonight"] * 4
    sentences.extend(anchors)

    templates = [
        lambda: sent(["the", nounc.next(), "was", adjc.next()]),
        lambda: sent(["the", adjc.next(), nounc.next(), "is", adjc.next()]),
        lambda: sent(["he", verbc.next()[2], "the", nounc.next(), advc.next()]),
        lambda: sent(["she", verbc.next()[2], "the", nounc.next(), "yesterday"]),
        lambda: sent(["they", "are", verbc.next()[3], "the", nounc.next()]),
        lambda: sent(["we", verbc.next()[2], "a", adjc.next(), nounc.next()]),
        lambda: sent(["the", nounc.next(), advc.next(), verbc.next()[1], "the", nounc.next()]),
        lambda: sent(["i", "saw", "a", adjc.next(), nounc.next(), "there"]),
        lambda: sent(["it", "was", "a", adjc.next(), nounc.next()]),
        lambda: sent(["the", nounc.next(), "and", "the", nounc.next(), "were", adjc.next()]),
        lambda: sent(["you", "can", verbc.next()[0], "the", nounc.next(), "now"]),
        lambda: sent(["the", nounc.next(), "near", "the", nounc.next(), "was", adjc.next()]),
        lambda: sent([advc.next(), "the", nounc.next(), verbc.next()[1]]),
        lambda: sent(["his", nounc.next(), "looked", adjc.next(), "today"]),
        lambda: sent(["her", nounc.next(), "became", adjc.next(), "again"]),
        lambda: sent(["people", advc.next(), verbc.next()[2], "the", nounc.next()]),
        lambda: sent(["a", adjc.next(), nounc.next(), "is", "worth", "a", nounc.next()]),
        lambda: sent(["the", nounc.next(), "seemed", adjc.next(), "this", "week"]),
    ]

    i = 0
    while len(sentences) < TARGET_SENTENCES or min(
            nounc.cycles(), verbc.cycles(), adjc.cycles(), advc.cycles()) < 2:
        templates[i % len(templates)]()
        i += 1

    # A couple of deliberate singletons so <unk> has mass after training.
    sentences.append("Zythum pleased the xebec crew")
    sentences.append("The quokka nibbled a kumquat")
    return sentences


# ---------------------------------------------------------------------------
# Hindi vocabulary: (roman, devanagari) pairs. Roman keys are the common
# transliterations; variants are generated mechanically below.
# ---------------------------------------------------------------------------

HINDI_WORDS = [
    # pronouns, particles, function words
    ("main", "मैं"), ("tum", "तुम"), ("aap", "आप"), ("hum", "हम"),
    ("woh", "वह"), ("yeh", "यह"), ("ve", "वे"), ("mujhe", "मुझे"),
    ("tujhe", "तुझे"), ("humein", "हमें"), ("unhe", "उन्हें"), ("usse", "उससे"),
    ("iska", "इसका"), ("uska", "उसका"), ("mera", "मेरा"), ("meri", "मेरी"),
    ("tera", "तेरा"), ("teri", "तेरी"), ("hamara", "हमारा"), ("apna", "अपना"),
    ("kaun", "कौन"), ("kya", "क्या"), ("kab", "कब"), ("kahan", "कहां"),
    ("kaise", "कैसे"), ("kyun", "क्यों"), ("yahan", "यहां"), ("wahan", "वहां"),
    ("ab", "अब"), ("tab", "तब"), ("jab", "जब"), ("phir", "फिर"),
    ("bhi", "भी"), ("to", "तो"), ("hi", "ही"), ("na", "ना"),
    ("nahin", "नहीं"), ("mat", "मत"), ("aur", "और"), ("ya", "या"),
    ("lekin", "लेकिन"), ("magar", "मगर"), ("agar", "अगर"), ("kyunki", "क्योंकि"),
    ("ki", "की"), ("ka", "का"), ("ke", "के"), ("ko", "को"),
    ("se", "से"), ("mein", "में"), ("par", "पर"), ("tak", "तक"),
    ("saath", "साथ"), ("bina", "बिना"), ("andar", "अंदर"), ("bahar", "बाहर"),
    ("upar", "ऊपर"), ("neeche", "नीचे"), ("aage", "आगे"), ("peeche", "पीछे"),
    ("paas", "पास"), ("door", "दूर"), ("bahut", "बहुत"), ("thoda", "थोड़ा"),
    ("zyada", "ज़्यादा"), ("kam", "कम"), ("sab", "सब"), ("sabko", "सबको"),
    ("koi", "कोई"), ("kuch", "कुछ"), ("har", "हर"), ("aisa", "ऐसा"),
    ("waisa", "वैसा"), ("jaisa", "जैसा"), ("itna", "इतना"), ("utna", "उतना"),
    # verbs and auxiliaries
    ("hai", "है"), ("hain", "हैं"), ("tha", "था"), ("thi", "थी"),
    ("the", "थे"), ("ho", "हो"), ("hoga", "होगा"), ("hogi", "होगी"),
    ("hona", "होना"), ("karo", "करो"), ("karna", "करना"), ("karta", "करता"),
    ("karti", "करती"), ("karte", "करते"), ("kiya", "किया"), ("karega", "करेगा"),
    ("jao", "जाओ"), ("jana", "जाना"), ("jata", "जाता"), ("jaati", "जाती"),
    ("gaya", "गया"), ("gayi", "गयी"), ("aao", "आओ"), ("aana", "आना"),
    ("aata", "आता"), ("aati", "आती"), ("aaya", "आया"), ("aayi", "आयी"),
    ("aa", "आ"), ("ja", "जा"), ("le", "ले"), ("lo", "लो"),
    ("lena", "लेना"), ("leta", "लेता"), ("liya", "लिया"), ("de", "दे"),
    ("do", "दो"), ("dena", "देना"), ("deta", "देता"), ("diya", "दिया"),
    ("dekho", "देखो"), ("dekhna", "देखना"), ("dekha", "देखा"), ("dekhta", "देखता"),
    ("suno", "सुनो"), ("sunna", "सुनना"), ("suna", "सुना"), ("sunta", "सुनता"),
    ("bolo", "बोलो"), ("bolna", "बोलना"), ("bola", "बोला"), ("bolta", "बोलता"),
    ("kaho", "कहो"), ("kehna", "कहना"), ("kaha", "कहा"), ("kehta", "कहता"),
    ("khao", "खाओ"), ("khana", "खाना"), ("khaya", "खाया"), ("khata", "खाता"),
    ("piyo", "पियो"), ("peena", "पीना"), ("piya", "पिया"), ("peeta", "पीता"),
    ("chalo", "चलो"), ("chalna", "चलना"), ("chala", "चला"), ("chalta", "चलता"),
    ("ruko", "रुको"), ("rukna", "रुकना"), ("ruka", "रुका"), ("rukta", "रुकता"),
    ("utho", "उठो"), ("uthna", "उठना"), ("utha", "उठा"), ("uthta", "उठता"),
    ("baitho", "बैठो"), ("baithna", "बैठना"), ("baitha", "बैठा"),
    ("souna", "सोना"), ("soya", "सोया"), ("sota", "सोता"),
    ("maar", "मार"), ("maro", "मारो"), ("maarna", "मारना"), ("maara", "मारा"),
    ("ro", "रो"), ("rona", "रोना"), ("roya", "रोया"), ("rota", "रोता"),
    ("hanso", "हंसो"), ("hansna", "हंसना"), ("hansa", "हंसा"),
    ("milna", "मिलना"), ("mila", "मिला"), ("milta", "मिलता"), ("milegi", "मिलेगी"),
    ("likho", "लिखो"), ("likhna", "लिखना"), ("likha", "लिखा"),
    ("padho", "पढ़ो"), ("padhna", "पढ़ना"), ("padha", "पढ़ा"),
    ("samajh", "समझ"), ("samjho", "समझो"), ("samjha", "समझा"),
    ("poochho", "पूछो"), ("poochha", "पूछा"), ("banao", "बनाओ"),
    ("banana", "बनाना"), ("banaya", "बनाया"), ("banta", "बनता"),
    ("rakho", "रखो"), ("rakha", "रखा"), ("rakhna", "रखना"),
    ("laao", "लाओ"), ("laya", "लाया"), ("laana", "लाना"),
    ("bhejo", "भेजो"), ("bheja", "भेजा"), ("bhoolo", "भूलो"), ("bhoola", "भूला"),
    ("seekho", "सीखो"), ("seekha", "सीखा"), ("khelo", "खेलो"), ("khela", "खेला"),
    ("khelna", "खेलना"), ("khelta", "खेलता"), ("jeeto", "जीतो"), ("jeeta", "जीता"),
    ("haara", "हारा"), ("bacho", "बचो"), ("bacha", "बचा"),
    ("pakdo", "पकड़ो"), ("pakda", "पकड़ा"), ("chhodo", "छोड़ो"), ("chhoda", "छोड़ा"),
    # nouns
    ("dil", "दिल"), ("doodh", "दूध"), ("bail", "बैल"), ("salaam", "सलाम"),
    ("subah", "सुबह"), ("shaam", "शाम"), ("raat", "रात"), ("din", "दिन"),
    ("dopahar", "दोपहर"), ("hafta", "हफ्ता"), ("mahina", "महीना"), ("saal", "साल"),
    ("samay", "समय"), ("ghadi", "घड़ी"), ("pal", "पल"), ("yug", "युग"),
    ("ghar", "घर"), ("darwaza", "दरवाज़ा"), ("khidki", "खिड़की"), ("chhat", "छत"),
    ("deewar", "दीवार"), ("aangan", "आंगन"), ("kamra", "कमरा"), ("rasoi", "रसोई"),
    ("bistar", "बिस्तर"), ("kursi", "कुर्सी"), ("mez", "मेज़"), ("palang", "पलंग"),
    ("chabi", "चाबी"), ("tala", "ताला"), ("diya2", "दीया"), ("batti", "बत्ती"),
    ("pani", "पानी"), ("chai", "चाय"), ("sharbat", "शरबत"), ("lassi", "लस्सी"),
    ("makhan", "मक्खन"), ("dahi", "दही"), ("ghee", "घी"), ("shahad", "शहद"),
    ("roti", "रोटी"), ("sabzi", "सब्ज़ी"), ("daal", "दाल"), ("chawal", "चावल"),
    ("atta", "आटा"), ("namak", "नमक"), ("mirch", "मिर्च"), ("masala", "मसाला"),
    ("pyaz", "प्याज़"), ("aloo", "आलू"), ("tamatar", "टमाटर"), ("gobhi", "गोभी"),
    ("palak", "पालक"), ("bhindi", "भिंडी"), ("baingan", "बैंगन"), ("kaddu", "कद्दू"),
    ("gajar", "गाजर"), ("muli", "मूली"), ("kheera", "खीरा"), ("nimbu", "नींबू"),
    ("aam", "आम"), ("kela", "केला"), ("seb", "सेब"), ("angoor", "अंगूर"),
    ("anar", "अनार"), ("papita", "पपीता"), ("kharbooza", "खरबूजा"),
    ("nariyal", "नारियल"), ("badam", "बादाम"), ("kaju", "काजू"),
    ("kishmish", "किशमिश"), ("mithai", "मिठाई"), ("laddu", "लड्डू"),
    ("barfi", "बर्फी"), ("jalebi", "जलेबी"), ("halwa", "हलवा"), ("kheer", "खीर"),
    ("admi", "आदमी"), ("aurat", "औरत"), ("bacchа", "बच्चा"), ("bacchi", "बच्ची"),
    ("ladka", "लड़का"), ("ladki", "लड़की"), ("beta", "बेटा"), ("beti", "बेटी"),
    ("maa", "मां"), ("pita", "पिता"), ("bhai", "भाई"), ("behen", "बहन"),
    ("chacha", "चाचा"), ("chachi", "चाची"), ("mama", "मामा"), ("mami", "मामी"),
    ("nana", "नाना"), ("nani", "नानी"), ("dada", "दादा"), ("dadi", "दादी"),
    ("pati", "पति"), ("patni", "पत्नी"), ("dost", "दोस्त"), ("padosi", "पड़ोसी"),
    ("mehman", "मेहमान"), ("dushman", "दुश्मन"), ("raja", "राजा"), ("rani", "रानी"),
    ("sainik", "सैनिक"), ("kisan", "किसान"), ("mazdoor", "मज़दूर"),
    ("vyapari", "व्यापारी"), ("dukandar", "दुकानदार"), ("gayak", "गायक"),
    ("kalakar", "कलाकार"), ("lekhak", "लेखक"), ("kavi", "कवि"),
    ("vaidya", "वैद्य"), ("guru", "गुरु"), ("shishya", "शिष्य"),
    ("gaon", "गांव"), ("shahar", "शहर"), ("nagar", "नगर"), ("basti", "बस्ती"),
    ("gali", "गली"), ("sadak", "सड़क"), ("rasta", "रास्ता"), ("chauraha", "चौराहा"),
    ("bazaar", "बाज़ार"), ("dukan", "दुकान"), ("mandi", "मंडी"), ("mela", "मेला"),
    ("mandir", "मंदिर"), ("masjid", "मस्जिद"), ("gurudwara", "गुरुद्वारा"),
    ("girja", "गिरजा"), ("school2", "स्कूल"), ("pathshala", "पाठशाला"),
    ("aspataal", "अस्पताल"), ("dawai", "दवाई"), ("vaidya2", "वैद्य"),
    ("khet", "खेत"), ("fasal", "फसल"), ("beej", "बीज"), ("mitti", "मिट्टी"),
    ("khad", "खाद"), ("kuan", "कुआं"), ("nadi", "नदी"), ("talab", "तालाब"),
    ("samundar", "समुंदर"), ("pahad", "पहाड़"), ("ghati", "घाटी"),
    ("jangal", "जंगल"), ("ped", "पेड़"), ("patta", "पत्ता"), ("daali", "डाली"),
    ("jad", "जड़"), ("phool", "फूल"), ("kali", "कली"), ("ghas", "घास"),
    ("kanta", "कांटा"), ("patthar", "पत्थर"), ("ret", "रेत"), ("dhool", "धूल"),
    ("aasman", "आसमान"), ("badal", "बादल"), ("barish", "बारिश"),
    ("boond", "बूंद"), ("bijli", "बिजली"), ("toofan", "तूफान"), ("hawa", "हवा"),
    ("dhoop", "धूप"), ("chhaya", "छाया"), ("garmi", "गर्मी"), ("sardi", "सर्दी"),
    ("thand", "ठंड"), ("mausam", "मौसम"), ("suraj", "सूरज"), ("chand", "चांद"),
    ("tara", "तारा"), ("dharti", "धरती"), ("aag", "आग"), ("dhuan", "धुआं"),
    ("janwar", "जानवर"), ("gaay", "गाय"), ("bhains", "भैंस"), ("bakri", "बकरी"),
    ("bhed", "भेड़"), ("ghoda", "घोड़ा"), ("gadha", "गधा"), ("oont", "ऊंट"),
    ("haathi", "हाथी"), ("sher", "शेर"), ("bagh", "बाघ"), ("bhalu", "भालू"),
    ("bandar", "बंदर"), ("lomdi", "लोमड़ी"), ("khargosh", "खरगोश"),
    ("kutта", "कुत्ता"), ("billi", "बिल्ली"), ("chuha", "चूहा"),
    ("chidiya", "चिड़िया"), ("kabutar", "कबूतर"), ("tota", "तोता"),
    ("koyal", "कोयल"), ("machhli", "मछली"), ("saanp", "सांप"),
    ("sharir", "शरीर"), ("sar", "सर"), ("baal", "बाल"), ("aankh", "आंख"),
    ("kaan", "कान"), ("naak", "नाक"), ("munh", "मुंह"), ("daant", "दांत"),
    ("jeebh", "जीभ"), ("gala", "गला"), ("kandha", "कंधा"), ("haath", "हाथ"),
    ("ungli", "उंगली"), ("pet", "पेट"), ("kamar", "कमर"), ("pair", "पैर"),
    ("ghutna", "घुटना"), ("khoon", "खून"), ("haddi", "हड्डी"),
    ("baat", "बात"), ("kahani", "कहानी"), ("kissa", "किस्सा"), ("geet", "गीत"),
    ("gaana", "गाना"), ("sangeet", "संगीत"), ("naach", "नाच"), ("khel", "खेल"),
    ("khiladi", "खिलाड़ी"), ("maidan", "मैदान"), ("jeet", "जीत"), ("haar", "हार"),
    ("inaam", "इनाम"), ("kitab", "किताब"), ("kagaz", "कागज़"), ("kalam", "कलम"),
    ("chithi", "चिट्ठी"), ("khabar", "खबर"), ("akhbar", "अखबार"),
    ("tasveer", "तस्वीर"), ("rang", "रंग"), ("roop", "रूप"), ("naam", "नाम"),
    ("kaam", "काम"), ("naukri", "नौकरी"), ("paisa", "पैसा"), ("rupaya", "रुपया"),
    ("daam", "दाम"), ("keemat", "कीमत"), ("kharcha", "खर्चा"), ("bachat", "बचत"),
    ("karza", "कर्ज़ा"), ("sona2", "सोना"), ("chandi", "चांदी"), ("heera", "हीरा"),
    ("moti", "मोती"), ("mala", "माला"), ("kapda", "कपड़ा"), ("kurta", "कुर्ता"),
    ("saree", "साड़ी"), ("dupatta", "दुपट्टा"), ("juta", "जूता"),
    ("chappal", "चप्पल"), ("topi", "टोपी"), ("chashma", "चश्मा"),
    ("jeb", "जेब"), ("thaila", "थैला"), ("sandook", "संदूक"),
    ("gaadi", "गाड़ी"), ("rail", "रेल"), ("jahaz", "जहाज़"), ("naav", "नाव"),
    ("pahiya", "पहिया"), ("safar", "सफर"), ("yatra", "यात्रा"), ("manzil", "मंज़िल"),
    ("pyaar", "प्यार"), ("mohabbat", "मोहब्बत"), ("dosti", "दोस्ती"),
    ("khushi", "खुशी"), ("gham", "ग़म"), ("dard", "दर्द"), ("aansu", "आंसू"),
    ("hasi", "हंसी"), ("umeed", "उम्मीद"), ("sapna", "सपना"), ("nind", "नींद"),
    ("yaad", "याद"), ("soch", "सोच"), ("man", "मन"), ("jaan", "जान"),
    ("zindagi", "ज़िंदगी"), ("jeevan", "जीवन"), ("maut", "मौत"), ("kismat", "किस्मत"),
    ("taqdeer", "तक़दीर"), ("dua", "दुआ"), ("aashirwad", "आशीर्वाद"),
    ("mehnat", "मेहनत"), ("himmat", "हिम्मत"), ("taqat", "ताक़त"), ("shakti", "शक्ति"),
    ("gyaan", "ज्ञान"), ("vidya", "विद्या"), ("bhasha", "भाषा"), ("shabd", "शब्द"),
    ("awaz", "आवाज़"), ("shor", "शोर"), ("sach", "सच"), ("jhooth", "झूठ"),
    ("sawal", "सवाल"), ("jawab", "जवाब"), ("matlab", "मतलब"), ("wajah", "वजह"),
    ("madad", "मदद"), ("seva", "सेवा"), ("izzat", "इज़्ज़त"), ("sharm", "शर्म"),
    ("gussa", "गुस्सा"), ("darr", "डर"), ("chinta", "चिंता"), ("shanti", "शांति"),
    ("aaram", "आराम"), ("sehat", "सेहत"), ("bimari", "बीमारी"), ("ilaj", "इलाज"),
    ("hindustani", "हिंदुस्तानी"), ("desh", "देश"), ("videsh", "विदेश"),
    ("duniya", "दुनिया"), ("log", "लोग"), ("janata", "जनता"), ("samaj", "समाज"),
    ("parivar", "परिवार"), ("shaadi", "शादी"), ("tyohar", "त्योहार"),
    ("holi", "होली"), ("diwali", "दिवाली"), ("mel", "मेल"), ("yun", "यूँ"),
    # adjectives
    ("accha", "अच्छा"), ("acchi", "अच्छी"), ("acche", "अच्छे"), ("bura", "बुरा"),
    ("buri", "बुरी"), ("bada", "बड़ा"), ("badi", "बड़ी"), ("bade", "बड़े"),
    ("chhota", "छोटा"), ("chhoti", "छोटी"), ("chhote", "छोटे"),
    ("naya", "नया"), ("nayi", "नयी"), ("naye", "नये"), ("purana", "पुराना"),
    ("purani", "पुरानी"), ("lamba", "लंबा"), ("lambi", "लंबी"),
    ("uncha", "ऊंचा"), ("unchi", "ऊंची"), ("gehra", "गहरा"), ("gehri", "गहरी"),
    ("mota", "मोटा"), ("moti2", "मोटी"), ("patla", "पतला"), ("patli", "पतली"),
    ("bhari", "भारी"), ("halka", "हल्का"), ("halki", "हल्की"),
    ("garam", "गरम"), ("thanda", "ठंडा"), ("thandi", "ठंडी"),
    ("meetha", "मीठा"), ("meethi", "मीठी"), ("khatta", "खट्टा"),
    ("teekha", "तीखा"), ("kadwa", "कड़वा"), ("taza", "ताज़ा"), ("baasi", "बासी"),
    ("saaf", "साफ"), ("ganda", "गंदा"), ("gandi", "गंदी"), ("sundar", "सुंदर"),
    ("pyara", "प्यारा"), ("pyari", "प्यारी"), ("mehnga", "महंगा"),
    ("sasta", "सस्ता"), ("sasti", "सस्ती"), ("ameer", "अमीर"),
    ("gareeb", "गरीब"), ("khush", "खुश"), ("udaas", "उदास"), ("naraz", "नाराज़"),
    ("pagal", "पागल"), ("samajhdar", "समझदार"), ("hoshiyar", "होशियार"),
    ("chalak", "चालाक"), ("seedha", "सीधा"), ("seedhi", "सीधी"),
    ("tedha", "टेढ़ा"), ("sakht", "सख्त"), ("naram", "नरम"), ("komal", "कोमल"),
    ("mazboot", "मज़बूत"), ("kamzor", "कमज़ोर"), ("tez", "तेज़"),
    ("dheema", "धीमा"), ("dheemi", "धीमी"), ("vyast", "व्यस्त"),
    ("khali", "खाली"), ("bhara", "भरा"), ("poora", "पूरा"), ("aadha", "आधा"),
    ("akela", "अकेला"), ("akeli", "अकेली"), ("asli", "असली"), ("nakli", "नकली"),
    ("sacha", "सच्चा"), ("jhootha", "झूठा"), ("zaroori", "ज़रूरी"),
    ("aasan", "आसान"), ("mushkil", "मुश्किल"), ("ajeeb", "अजीब"),
    ("mashhoor", "मशहूर"), ("kafi", "काफी"), ("aam2", "आम"),
    ("khaas", "खास"), ("alag", "अलग"), ("jaldi", "जल्दी"), ("der", "देर"),
    ("roz", "रोज़"), ("hamesha", "हमेशा"), ("kabhi", "कभी"), ("abhi", "अभी"),
    ("pehle", "पहले"), ("baad", "बाद"), ("aaj", "आज"), ("kal", "कल"),
    ("parson", "परसों"), ("ek", "एक"), ("do2", "दो"), ("teen", "तीन"),
    ("char", "चार"), ("paanch", "पांच"), ("chhe", "छह"), ("saat2", "सात"),
    ("aath", "आठ"), ("nau", "नौ"), ("das", "दस"), ("sau", "सौ"),
    ("hazaar", "हज़ार"), ("lakh", "लाख"), ("pehla", "पहला"), ("doosra", "दूसरा"),
    ("teesra", "तीसरा"), ("aakhri", "आखरी"),
]


def hindi_variants(roman):
    """Mechanical spelling variants of a roman transliteration.

    Romanized Hindi has no standard orthography; the same word appears with
    long vowels doubled or not, v/w swapped, aspiration digraphs simplified.
    The variants mirror that: per-occurrence long/short vowel swaps plus
    whole-string digraph toggles, capped per word.
    """
    import itertools as _it

    # per-occurrence vowel length toggles (a<->aa, i<->ee, u<->oo)
    segments = []
    i = 0
    while i < len(roman):
        two = roman[i:i + 2]
        if two in ("aa", "ee", "oo"):
            short = {"aa": "a", "ee": "i", "oo": "u"}[two]
            segments.append((two, short))
            i += 2
        elif roman[i] in "aiu" and two not in ("ai", "au"):
            longf = {"a": "aa", "i": "ee", "u": "oo"}[roman[i]]
            segments.append((roman[i], longf))
            i += 1
        else:
            segments.append((roman[i],))
            i += 1
    out = set()
    # limit the cartesian product to keep entries per word bounded
    max_combos = 16
    combos = _it.product(*[range(len(s)) for s in segments])
    for combo in _it.islice(combos, max_combos * 4):
        if len(out) >= max_combos:
            break
        out.add("".join(seg[pick] for seg, pick in zip(segments, combo)))

    # whole-string digraph toggles, applied on every vowel variant
    rules = [("v", "w"), ("ph", "f"), ("z", "j"), ("q", "k"), ("sh", "s"),
             ("kh", "k"), ("th", "t"), ("dh", "d"), ("bh", "b"), ("gh", "g"),
             ("ai", "ae"), ("au", "ao")]
    forms = set(out) | {roman}
    for a, b in rules:
        new = set()
        for f in forms:
            new.add(f)
            if a in f:
                new.add(f.replace(a, b))
        forms = new
        if len(forms) > 64:
            break
    # final i <-> ee endings
    new = set()
    for f in forms:
        new.add(f)
        if f.endswith("i") and not f.endswith("ai"):
            new.add(f[:-1] + "ee")
    forms = new
    return sorted(f for f in forms if f)



# Regular verb roots; conjugations are generated mechanically (root + o/na/
# ta/ti/te/a/i/e/ega/egi/enge/kar), which is exactly how these verbs behave.
HINDI_VERB_ROOTS = [
    ("chal", "चल"), ("bol", "बोल"), ("sun", "सुन"), ("dekh", "देख"),
    ("samajh", "समझ"), ("likh", "लिख"), ("padh", "पढ़"), ("khel", "खेल"),
    ("daud", "दौड़"), ("bhag", "भाग"), ("rakh", "रख"), ("uth", "उठ"),
    ("baith", "बैठ"), ("soch", "सोच"), ("pooch", "पूछ"), ("badal", "बदल"),
    ("nikal", "निकल"), ("pahunch", "पहुंच"), ("ghoom", "घूम"), ("kood", "कूद"),
    ("naach", "नाच"), ("khareed", "खरीद"), ("bech", "बेच"), ("kaat", "काट"),
    ("seekh", "सीख"), ("maang", "मांग"), ("bhool", "भूल"), ("tod", "तोड़"),
    ("jod", "जोड़"), ("chhod", "छोड़"), ("pakad", "पकड़"), ("sambhal", "संभल"),
    ("utar", "उतर"), ("chadh", "चढ़"), ("gir", "गिर"), ("jal", "जल"),
    ("ban", "बन"), ("khul", "खुल"), ("khol", "खोल"), ("mil", "मिल"),
    ("jhagad", "झगड़"), ("muskura", "मुस्कुरा"), ("ladd", "लड़"), ("kar", "कर"),
    ("pehchan", "पहचान"), ("bhar", "भर"), ("kho", "खो"), ("jaag", "जाग"),
]

HINDI_VERB_SUFFIXES = [
    ("o", "ो"), ("na", "ना"), ("ta", "ता"), ("ti", "ती"), ("te", "ते"),
    ("a", "ा"), ("i", "ी"), ("e", "े"), ("ega", "ेगा"), ("egi", "ेगी"),
    ("enge", "ेंगे"), ("kar", "कर"),
]


def conjugated_pairs():
    pairs = []
    for roman, dev in HINDI_VERB_ROOTS:
        for suf_r, suf_d in HINDI_VERB_SUFFIXES:
            pairs.append((roman + suf_r, dev + suf_d))
    return pairs


HINDI_ANCHORS = []
HINDI_ANCHORS += ["आ बैल मुझे मार"] * 18
HINDI_ANCHORS += ["बैल खेत में काम करता है"] * 5
HINDI_ANCHORS += ["किसान का बैल मज़बूत था"] * 4
HINDI_ANCHORS += ["फिर भी दिल है हिंदुस्तानी"] * 14
HINDI_ANCHORS += ["दिल है तो जान है"] * 5
HINDI_ANCHORS += ["दिल की बात कहो"] * 6
HINDI_ANCHORS += ["उसका दिल बहुत बड़ा है"] * 4
HINDI_ANCHORS += ["दूध पीना सेहत के लिए अच्छा है"] * 6
HINDI_ANCHORS += ["गाय का दूध ताज़ा था"] * 5
HINDI_ANCHORS += ["बच्चे को दूध दो"] * 4
HINDI_ANCHORS += ["सुबह उठो और दूध पियो"] * 4
HINDI_ANCHORS += ["उसने सबको सलाम किया"] * 6
HINDI_ANCHORS += ["मेरा सलाम उन तक पहुंचा दो"] * 4
HINDI_ANCHORS += ["यूँ रो मत मेरे दोस्त"] * 5
HINDI_ANCHORS += ["अब रो मत बात सुनो"] * 4
HINDI_ANCHORS += ["सुबह की हवा ताज़ा थी"] * 4
HINDI_ANCHORS += ["कल सुबह जल्दी उठो"] * 4
HINDI_ANCHORS += ["खाना हो या पानी सब ताज़ा है"] * 4
HINDI_ANCHORS += ["काम हो या आराम समय देखो"] * 3


def hindi_corpus():
    """Devanagari sentences from slot templates; every vocab word twice."""
    vocab = [dev for (_r, dev) in HINDI_WORDS]
    # words that would phonetically collide with the bundled examples stay
    # out of the corpus entirely (they remain legal dictionary entries).
    banned = {"बेल", "मोर", "बिल", "खिल", "मिल", "तिल", "दूर"}
    subjects = ["वह", "यह", "राम", "मोहन", "सीता", "गीता", "किसान", "बच्चा",
                "लड़का", "लड़की", "दोस्त", "आदमी", "औरत", "गुरु", "राजा"]
    nounc = Cycle([dev for (_r, dev) in HINDI_WORDS])
    sentences = list(HINDI_ANCHORS)

    frames = [
        "{s} {n} को देखता है",
        "{n} बहुत अच्छा है",
        "{s} ने {n} लिया",
        "मुझे {n} चाहिए",
        "यह {n} नया है",
        "{s} {n} से खुश है",
        "उसका {n} यहां है",
        "{n} और {m} साथ हैं",
        "{s} को {n} पसंद है",
        "घर में {n} रखा है",
        "{n} की बात सुनो",
        "वह {n} लेकर आया",
        "{s} ने {n} देखा था",
        "बाज़ार में {n} सस्ता है",
        "{n} पर ध्यान दो",
        "हम {n} के पास गये",
    ]

    si = Cycle(subjects)
    i = 0
    while len(sentences) < TARGET_SENTENCES or nounc.cycles() < 2:
        frame = frames[i % len(frames)]
        n = nounc.next()
        while n in banned:
            n = nounc.next()
        m = nounc.next()
        while m in banned:
            m = nounc.next()
        sentences.append(frame.format(s=si.next(), n=n, m=m))
        i += 1
    # singletons for <unk> mass
    sentences.append("छछूंदर बगीचे में घुसी")
    sentences.append("झींगुर रात भर बोला")
    return sentences


# ---------------------------------------------------------------------------
# Pronouncing dictionary subset (cmudict format, Indian-English oriented
# coverage of the corpus's frequent words and every anchor word).
# ---------------------------------------------------------------------------

CMUDICT = """
A  AH0
ABOUT  AH0 B AW1 T
AGAIN  AH0 G EH1 N
ALL  AO1 L
ALONE  AH0 L OW1 N
AMAZED  AH0 M EY1 Z D
AND  AH0 N D
ARE  AA1 R
ARRIVED  ER0 AY1 V D
AT  AE1 T
AUDITORS  AO1 D AH0 T ER0 Z
BAIL  B EY1 L
BALL  B AO1 L
BAT  B AE1 T
BECAME  B IH0 K EY1 M
BEFORE  B IH0 F AO1 R
BEGINS  B IH0 G IH1 N Z
BOARD  B AO1 R D
BOOK  B UH1 K
BREAD  B R EH1 D
BRIDGE  B R IH1 JH
BROUGHT  B R AO1 T
BUS  B AH1 S
BUT  B AH1 T
BUTTER  B AH1 T ER0
CAME  K EY1 M
CAN  K AE1 N
CANYON  K AE1 N Y AH0 N
CAPTAIN  K AE1 P T AH0 N
CARS  K AA1 R Z
CAT  K AE1 T
CHAI  CH AY1
CHEESE  CH IY1 Z
CLEAN  K L IY1 N
COACH  K OW1 CH
COFFEE  K AA1 F IY0
COLD  K OW1 L D
COURT  K AO1 R T
CRICKET  K R IH1 K AH0 T
CROWD  K R AW1 D
DAY  D EY1
DELHI  D EH1 L IY0
DINNER  D IH1 N ER0
DOG  D AO1 G
DOODH  D UW1 D
DOOR  D AO1 R
DOWN  D AW1 N
DRANK  D R AE1 NG K
DRINK  D R IH1 NG K
EVENING  IY1 V N IH0 NG
EVERY  EH1 V ER0 IY0
EVERYONE  EH1 V R IY0 W AH2 N
FAMOUS  F EY1 M AH0 S
FARM  F AA1 R M
FAST  F AE1 S T
FELT  F EH1 L T
FINAL  F AY1 N AH0 L
FOOD  F UW1 D
FOR  F AO1 R
FRESH  F R EH1 SH
FROM  F R AH1 M
GAME  G EY1 M
GLASS  G L AE1 S
GOAL  G OW1 L
GOOD  G UH1 D
GOODS  G UH1 D Z
GRAND  G R AE1 N D
GRANTED  G R AE1 N T IH0 D
GREAT  G R EY1 T
GUESTS  G EH1 S T S
HALL  HH AO1 L
HE  HH IY1
HEAVY  HH EH1 V IY0
HELMET  HH EH1 L M AH0 T
HER  HH ER1
HERE  HH IY1 R
HIM  HH IH1 M
HIS  HH IH1 Z
HOME  HH OW1 M
HOT  HH AA1 T
I  AY1
IMPRESSED  IH0 M P R EH1 S T
IN  IH0 N
IS  IH1 Z
IT  IH1 T
JUICE  JH UW1 S
KEEPS  K IY1 P S
LEFT  L EH1 F T
LUNCH  L AH1 N CH
MAT  M AE1 T
MATCH  M AE1 CH
MIL  M IH1 L
MILE  M AY1 L
MILK  M IH1 L K
MONDAY  M AH1 N D EY2
MORNING  M AO1 R N IH0 NG
MUMBAI  M UH0 M B AY1
NEAR  N IY1 R
NEWS  N UW1 Z
NIGHT  N AY1 T
NOW  N AW1
OF  AH0 V
ON  AA1 N
ORDERED  AO1 R D ER0 D
OUR  AW1 ER0
OUTSIDE  AW1 T S AY1 D
PEACEFUL  P IY1 S F AH0 L
PEOPLE  P IY1 P AH0 L
PIANO  P IY0 AE1 N OW0
PLAY  P L EY1
PLAYER  P L EY1 ER0
PLEA  P L IY1
PLEASE  P L IY1 Z
PLEASED  P L IY1 Z D
POPULAR  P AA1 P Y AH0 L ER0
PROUD  P R AW1 D
RAIN  R EY1 N
READERS  R IY1 D ER0 Z
REJECTED  R IH0 JH EH1 K T IH0 D
RELEASED  R IY0 L IY1 S T
RICE  R AY1 S
ROAD  R OW1 D
SAW  S AO1
SCHOOL  S K UW1 L
SERVED  S ER1 V D
SHE  SH IY1
SHOW  SH OW1
SLAM  S L AE1 M
SLOW  S L OW1
SOLD  S OW1 L D
STADIUM  S T EY1 D IY0 AH0 M
STATION  S T EY1 SH AH0 N
STOOD  S T UH1 D
STREET  S T R IY1 T
STUDENTS  S T UW1 D AH0 N T S
SUNDAY  S AH1 N D EY2
SURPRISED  S ER0 P R AY1 Z D
TASTY  T EY1 S T IY0
TEA  T IY1
TEAM  T IY1 M
THE  DH AH0
THE(2)  DH IY0
THEY  DH EY1
THIS  DH IH1 S
TITLE  T AY1 T AH0 L
TO  T UW1
TODAY  T AH0 D EY1
TOMORROW  T AH0 M AA1 R OW2
TONIGHT  T AH0 N AY1 T
TOTAL  T OW1 T AH0 L
TRAFFIC  T R AE1 F IH0 K
TURN  T ER1 N
VISITORS  V IH1 Z IH0 T ER0 Z
WAS  W AA1 Z
WATER  W AO1 T ER0
WE  W IY1
WEEK  W IY1 K
WELCOME  W EH1 L K AH0 M
WERE  W ER1
WICKET  W IH1 K AH0 T
WIN  W IH1 N
WISH  W IH1 SH
WITH  W IH1 DH
WON  W AH1 N
WORKED  W ER1 K T
YESTERDAY  Y EH1 S T ER0 D EY2
YOU  Y UW1
ZEAL  Z IY1 L
""".strip()

PHONEME_MAP = """# CMU phoneme -> WX units (Indian English rendering)
AA\tA
AE\tE
AH\ta
AO\to
AW\ta u
AY\ta i
B\tb
CH\tc
D\tx
DH\tx
EH\te
ER\ta r
EY\te
F\tP
G\tg
HH\th
IH\ti
IY\tI
JH\tj
K\tk
L\tl
M\tm
N\tn
NG\tM
OW\to
OY\to i
P\tp
R\tr
S\ts
SH\tS
T\tw
TH\tW
UH\tu
UW\tU
V\tv
W\tv
Y\ty
Z\tj
ZH\tj
"""

NAMED_ENTITIES = ["amul", "delhi", "greece", "india", "mark", "mumbai",
                  "rajni", "vir"]

GOLD = [
    {"id": "pun1", "text": "Grand Salaam", "pun": "salaam",
     "targets": ["slam"], "category": "intra_sentential",
     "notes": "ad caption; target is the english collocate of grand"},
    {"id": "pun2", "text": "Phir bhi zeal hai Hindustani", "pun": "zeal",
     "targets": ["dil", "दिल"], "category": "intra_sentential"},
    {"id": "pun3", "text": "Facebhukh with Amul, Mark", "pun": "facebhukh",
     "targets": ["facebook"], "category": "intra_word",
     "notes": "portmanteau of facebook and bhukh"},
    {"id": "pun4", "text": "Rajnitea?", "pun": "rajnitea",
     "targets": ["rajneeti", "राजनीति"], "category": "intra_word"},
    {"id": "pun5", "text": "Aa bail mujhe maar", "pun": "bail",
     "targets": ["बैल"], "category": "intra_sentential",
     "notes": "ambiguous token; hindi reading is the target"},
    {"id": "pun6", "text": "Doodh Morning!", "pun": "doodh",
     "targets": ["good"], "category": "intra_sentential"},
    {"id": "pun7", "text": "Vir proud of you", "pun": "vir",
     "targets": ["we are"], "category": "intra_sentential",
     "notes": "single pun word maps to two target words"},
    {"id": "pun8", "text": "Greece, EU ro mat", "pun": "EU",
     "targets": ["yun"], "category": "intra_sentential",
     "notes": "pun on the pronunciation of an abbreviation"},
    {"id": "pun9", "text": "Fast food ho ya sulu food", "pun": "sulu",
     "targets": ["slow"], "category": "intra_sentential",
     "notes": "target bigram absent from the language models"},
    {"id": "syn1", "text": "Good subah everyone", "pun": "subah",
     "targets": ["morning"], "category": "intra_sentential",
     "notes": "synthetic; phonetically distant target"},
]

CONFIG = """# punrecover demo configuration (paths relative to this file)
english_lexicon=lexicon/english_words.txt
hindi_lexicon=lexicon/hindi_roman_devanagari.tsv
ne_list=lexicon/named_entities.txt
pron_dict=cmudict/en_in.dict
phoneme_map=phoneme_map/cmu_to_wx.tsv
english_lm=../build/english.lm
hindi_lm=../build/hindi.lm
kn_discount=0.75
lm_min_count=2
context_k=200
top_n=5
intra_word_threshold=0.45
lm_blend_weight=0.0
"""


def write(path, content):
    full = os.path.join(OUT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8") as f:
        f.write(content)
    print(f"wrote {path}")


def main():
    english = english_corpus()
    assert len(english) >= 20000, len(english)
    write("corpora/english.txt", "\n".join(english) + "\n")

    # English wordlist: normalized types with count >= 2, mirroring the
    # library's build rule on the same corpus.
    counts = {}
    for line in english:
        for w in line.lower().split():
            counts[w] = counts.get(w, 0) + 1
    words = sorted(w for w, c in counts.items() if c >= 2)
    assert len(words) >= MIN_ENGLISH_TYPES, len(words)
    for must in ANCHOR_WORDS:
        assert must in words, must
    for absent in ("salaam", "vir", "greece", "sulu", "eu", "slum", "solemn",
                   "hood", "bale"):
        assert absent not in words, absent
    assert "slow food" not in " ".join(english).lower()
    write("lexicon/english_words.txt", "\n".join(words) + "\n")

    hindi = hindi_corpus()
    assert len(hindi) >= 20000, len(hindi)
    write("corpora/hindi.txt", "\n".join(hindi) + "\n")

    pairs = set()
    for roman, dev in HINDI_WORDS + conjugated_pairs():
        roman = roman.rstrip("0123456789")
        for variant in hindi_variants(roman):
            pairs.add((variant, dev))
    assert len(pairs) >= MIN_HINDI_PAIRS, len(pairs)
    roman_keys = {r for (r, _d) in pairs}
    for must in ("salaam", "bail", "doodh", "phir", "bhi", "hai",
                 "hindustani", "aa", "mujhe", "maar", "ho", "ya", "ro",
                 "mat", "subah", "dil", "yun"):
        assert must in roman_keys, must
    for absent in ("zeal", "grand", "slam", "good", "morning", "vir",
                   "greece", "sulu", "slow", "food", "fast", "proud"):
        assert absent not in roman_keys, absent
    lines = [f"{r}\t{d}" for (r, d) in sorted(pairs)]
    header = "# romanized hindi -> devanagari; one pair per line\n"
    write("lexicon/hindi_roman_devanagari.tsv", header + "\n".join(lines) + "\n")

    write("lexicon/named_entities.txt", "\n".join(NAMED_ENTITIES) + "\n")
    write("cmudict/en_in.dict",
          ";;; cmudict-format subset for the bundled demo corpus\n"
          + CMUDICT + "\n")
    write("phoneme_map/cmu_to_wx.tsv", PHONEME_MAP)
    write("gold/paper_examples.jsonl",
          "\n".join(json.dumps(g, ensure_ascii=False) for g in GOLD) + "\n")
    write("punrecover.conf", CONFIG)

    print(f"english sentences: {len(english)}, types>=2: {len(words)}")
    print(f"hindi sentences: {len(hindi)}, tsv pairs: {len(pairs)}")


if __name__ == "__main__":
    main()
