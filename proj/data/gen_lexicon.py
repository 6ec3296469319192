#!/usr/bin/env python3
"""Builds lexicon-en.json and lexicon-fr.json.

The core section pins every function word, irregular form and message
lemma by hand; the bulk sections add everyday regular vocabulary with
table assignment by suffix. Run from the data/ directory:

    python3 gen_lexicon.py
"""
import json
import sys

# ---------------------------------------------------------------------
# English
# ---------------------------------------------------------------------

EN = {}

def en(lemma, pos, **feat):
    entry = EN.setdefault(lemma, {})
    if pos in entry:
        raise SystemExit(f"duplicate en entry {lemma}/{pos}")
    entry[pos] = feat

# determiners
en("the", "D", tab="d0")
en("a", "D", tab="da")
en("this", "D", tab="dthis")
en("that", "D", tab="dthat")
for d in ["my", "your", "his", "her", "its", "our", "their", "no", "every",
          "each", "some", "any", "which", "whose", "all", "most", "such"]:
    en(d, "D", tab="d0")

# personal pronouns (paradigm table pn1; lemma picks the default case)
en("I", "Pro", tab="pn1")
en("me", "Pro", tab="pn1")
en("you", "Pro", tab="pn1")
en("he", "Pro", tab="pn1", g="m")
en("him", "Pro", tab="pn1", g="m")
en("she", "Pro", tab="pn1", g="f")
en("it", "Pro", tab="pn1")
en("we", "Pro", tab="pn1", n="p")
en("us", "Pro", tab="pn1", n="p")
en("they", "Pro", tab="pn1", n="p")
en("them", "Pro", tab="pn1", n="p")
en("myself", "Pro", tab="pn1")
en("yourself", "Pro", tab="pn1")
en("himself", "Pro", tab="pn1", g="m")
en("herself", "Pro", tab="pn1", g="f")
en("itself", "Pro", tab="pn1")
en("ourselves", "Pro", tab="pn1", n="p")
en("themselves", "Pro", tab="pn1", n="p")
# "her" the possessive is listed under D; "her" the pronoun shares pn1
EN["her"]["Pro"] = {"tab": "pn1", "g": "f"}

# prepositions and conjunctions
for p in ["to", "of", "in", "on", "at", "by", "with", "for", "from", "under",
          "over", "behind", "near", "during", "before", "after", "since",
          "until", "into", "about", "against", "between", "through", "without",
          "above", "below", "around", "inside", "outside", "toward", "upon"]:
    en(p, "P", tab="")
for c in ["and", "or", "but", "because", "if", "when", "that", "while",
          "although", "so"]:
    en(c, "C", tab="")

# auxiliaries and irregular verbs
en("be", "V", tab="vbe")
en("have", "V", tab="vhave")
en("do", "V", tab="vdo")

EN_IRREGULAR_VERBS = {
    # lemma: (table, simple past, past participle, extra irregulars)
    "eat":   ("v1", "ate", "eaten", {}),
    "give":  ("v2", "gave", "given", {}),
    "take":  ("v2", "took", "taken", {}),
    "make":  ("v2", "made", "made", {}),
    "come":  ("v2", "came", "come", {}),
    "become":("v2", "became", "become", {}),
    "go":    ("v4", "went", "gone", {}),
    "say":   ("v1", "said", "said", {}),
    "see":   ("v2", "saw", "seen", {"pr": "seeing"}),
    "know":  ("v1", "knew", "known", {}),
    "think": ("v1", "thought", "thought", {}),
    "find":  ("v1", "found", "found", {}),
    "tell":  ("v1", "told", "told", {}),
    "leave": ("v2", "left", "left", {}),
    "feel":  ("v1", "felt", "felt", {}),
    "bring": ("v1", "brought", "brought", {}),
    "begin": ("v1", "began", "begun", {"pr": "beginning"}),
    "keep":  ("v1", "kept", "kept", {}),
    "hold":  ("v1", "held", "held", {}),
    "write": ("v2", "wrote", "written", {}),
    "stand": ("v1", "stood", "stood", {}),
    "hear":  ("v1", "heard", "heard", {}),
    "let":   ("v1", "let", "let", {"pr": "letting"}),
    "mean":  ("v1", "meant", "meant", {}),
    "set":   ("v1", "set", "set", {"pr": "setting"}),
    "meet":  ("v1", "met", "met", {"pr": "meeting"}),
    "run":   ("v1", "ran", "run", {"pr": "running"}),
    "pay":   ("v1", "paid", "paid", {}),
    "sit":   ("v1", "sat", "sat", {"pr": "sitting"}),
    "speak": ("v1", "spoke", "spoken", {}),
    "lie":   ("v2", "lay", "lain", {"pr": "lying"}),
    "lead":  ("v1", "led", "led", {}),
    "read":  ("v1", "read", "read", {}),
    "grow":  ("v1", "grew", "grown", {}),
    "lose":  ("v2", "lost", "lost", {}),
    "fall":  ("v1", "fell", "fallen", {}),
    "send":  ("v1", "sent", "sent", {}),
    "build": ("v1", "built", "built", {}),
    "understand": ("v1", "understood", "understood", {}),
    "draw":  ("v1", "drew", "drawn", {}),
    "break": ("v1", "broke", "broken", {}),
    "spend": ("v1", "spent", "spent", {}),
    "cut":   ("v1", "cut", "cut", {"pr": "cutting"}),
    "rise":  ("v2", "rose", "risen", {}),
    "drive": ("v2", "drove", "driven", {}),
    "buy":   ("v1", "bought", "bought", {}),
    "wear":  ("v1", "wore", "worn", {}),
    "choose":("v2", "chose", "chosen", {}),
    "seek":  ("v1", "sought", "sought", {}),
    "throw": ("v1", "threw", "thrown", {}),
    "catch": ("v4", "caught", "caught", {}),
    "deal":  ("v1", "dealt", "dealt", {}),
    "win":   ("v1", "won", "won", {"pr": "winning"}),
    "forget":("v1", "forgot", "forgotten", {"pr": "forgetting"}),
    "lay":   ("v1", "laid", "laid", {}),
    "sell":  ("v1", "sold", "sold", {}),
    "fly":   ("v3", "flew", "flown", {}),
    "sing":  ("v1", "sang", "sung", {}),
    "drink": ("v1", "drank", "drunk", {}),
    "swim":  ("v1", "swam", "swum", {"pr": "swimming"}),
    "ride":  ("v2", "rode", "ridden", {}),
    "ring":  ("v1", "rang", "rung", {}),
    "shake": ("v2", "shook", "shaken", {}),
    "hide":  ("v2", "hid", "hidden", {}),
    "hit":   ("v1", "hit", "hit", {"pr": "hitting"}),
    "hurt":  ("v1", "hurt", "hurt", {}),
    "put":   ("v1", "put", "put", {"pr": "putting"}),
    "shut":  ("v1", "shut", "shut", {"pr": "shutting"}),
    "sleep": ("v1", "slept", "slept", {}),
    "spring":("v1", "sprang", "sprung", {}),
    "steal": ("v1", "stole", "stolen", {}),
    "strike":("v2", "struck", "struck", {}),
    "swear": ("v1", "swore", "sworn", {}),
    "teach": ("v4", "taught", "taught", {}),
    "tear":  ("v1", "tore", "torn", {}),
    "wake":  ("v2", "woke", "woken", {}),
    "bear":  ("v1", "bore", "borne", {}),
    "beat":  ("v1", "beat", "beaten", {}),
    "bend":  ("v1", "bent", "bent", {}),
    "bind":  ("v1", "bound", "bound", {}),
    "bite":  ("v2", "bit", "bitten", {}),
    "blow":  ("v1", "blew", "blown", {}),
    "burst": ("v1", "burst", "burst", {}),
    "cast":  ("v1", "cast", "cast", {}),
    "cling": ("v1", "clung", "clung", {}),
    "cost":  ("v1", "cost", "cost", {}),
    "creep": ("v1", "crept", "crept", {}),
    "dig":   ("v1", "dug", "dug", {"pr": "digging"}),
    "feed":  ("v1", "fed", "fed", {}),
    "fight": ("v1", "fought", "fought", {}),
    "flee":  ("v2", "fled", "fled", {"pr": "fleeing"}),
    "freeze":("v2", "froze", "frozen", {}),
    "hang":  ("v1", "hung", "hung", {}),
    "kneel": ("v1", "knelt", "knelt", {}),
    "lend":  ("v1", "lent", "lent", {}),
    "light": ("v1", "lit", "lit", {}),
    "quit":  ("v1", "quit", "quit", {"pr": "quitting"}),
    "shine": ("v2", "shone", "shone", {}),
    "shoot": ("v1", "shot", "shot", {}),
    "shrink":("v1", "shrank", "shrunk", {}),
    "slide": ("v2", "slid", "slid", {}),
    "spin":  ("v1", "spun", "spun", {"pr": "spinning"}),
    "spread":("v1", "spread", "spread", {}),
    "sweep": ("v1", "swept", "swept", {}),
    "stick": ("v1", "stuck", "stuck", {}),
    "sting": ("v1", "stung", "stung", {}),
    "swing": ("v1", "swung", "swung", {}),
    "weep":  ("v1", "wept", "wept", {}),
    "wind":  ("v1", "wound", "wound", {}),
}
for lemma, data in list(EN_IRREGULAR_VERBS.items()):
    if data is None:
        continue
    tab, ps, pp, extra = data
    irreg = {"ps": ps, "pp": pp}
    irreg.update(extra)
    en(lemma, "V", tab=tab, irreg=irreg)

EN_REGULAR_VERBS = """
accept act add admire admit advise agree allow announce annoy answer appear
argue arrange arrive ask attack attend avoid bake balance bathe behave believe
belong blame boil borrow bounce bow breathe brush burn call calm care carry
cause celebrate change charge chase cheer chew claim clean clear climb close
collect comb compare complain complete compute confirm connect consider contain
continue cook copy correct cough count cover crawl create cross cry damage
dance dare decide declare decorate delay deliver demand deny depend describe
deserve design destroy develop disagree discover discuss divide dream dress
drown dry earn empty encourage enjoy enter escape examine excite excuse exist
expect explain explore express fail fear fetch fill film finish fix float flow
fold follow force form gather gaze glow greet guard guess guide handle happen
hate heal help hope hunt hurry ignore imagine implement improve include inform
insist intend introduce invent invite iron join joke jump kick kill kiss knock
label land last laugh learn lick lift like listen live load lock look love
manage march mark marry match matter measure melt mention mix move murder need
notice number obey observe offer open order owe own pack paint pardon park
pass paste perform pick plant please point polish possess pour practice praise
pray prefer prepare present press pretend prevent print produce promise protect
prove pull punish push race rain raise reach realize receive recognize record
reduce refuse regret relax remain remember remind remove rent repair repeat
replace reply report request rescue rest return review reward rub rule rush
sail save scare scream seem serve settle share shave shout show sigh sign
smell smile smoke sneeze sound spell spill start state stay steer step stitch
store stretch study succeed suffer suggest supply support suppose surprise
surround survive talk taste tempt test thank tie touch train travel treat
tremble trust turn type use value visit wait walk wander want warm warn wash
waste watch water wave weigh welcome whisper whistle wipe wish wonder work
worry wrap yawn yell
""".split()

EN_DOUBLING_VERBS = """
stop plan drop grab hug rub chat chop clap drag drum fit flip grin grip hop
jog knit map mop nod pat pet pin plot pop rip rob scan shop ship sip skip
slam slip snap spot stir swap tap tip top trap trim trip zip beg brag dim
dip dot prefer refer occur permit
""".split()

DOUBLE_TABLE = {"p": "v5p", "t": "v5t", "n": "v5n", "g": "v5g", "b": "v5b",
                "r": "v5r", "m": "v5m", "d": "v5d"}

def en_verb_table(lemma):
    if lemma.endswith("e"):
        return "v2"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        return "v3"
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return "v4"
    return "v1"

for v in EN_REGULAR_VERBS:
    if v in EN and "V" in EN[v]:
        continue
    en(v, "V", tab=en_verb_table(v))
for v in EN_DOUBLING_VERBS:
    if v in EN and "V" in EN[v]:
        continue
    t = DOUBLE_TABLE.get(v[-1])
    if not t:
        raise SystemExit(f"no doubling table for {v}")
    en(v, "V", tab=t)

EN_IRREGULAR_NOUNS = {
    "man": "men", "woman": "women", "child": "children", "foot": "feet",
    "tooth": "teeth", "mouse": "mice", "goose": "geese", "person": "people",
    "ox": "oxen",
}
for lemma, plural in EN_IRREGULAR_NOUNS.items():
    en(lemma, "N", tab="nI", irreg={"p": plural}, g=("m" if lemma in ("man", "ox") else
       "f" if lemma == "woman" else "x"))

EN_INVARIABLE_NOUNS = "sheep fish deer series species aircraft salmon trout".split()
for n_ in EN_INVARIABLE_NOUNS:
    en(n_, "N", tab="nI")

EN_VES_NOUNS = {"leaf": "n4", "loaf": "n4", "wolf": "n4", "shelf": "n4",
                "half": "n4", "calf": "n4", "thief": "n4", "knife": "n5",
                "wife": "n5", "life": "n5"}
for lemma, tab in EN_VES_NOUNS.items():
    en(lemma, "N", tab=tab)

EN_NOUNS = """
apple orange banana plane parameter position option word language lexicon
value sentence element coordination passive object constituent form warning
morning fork table chair city day week month year world time hour minute
second house car book tree garden street road school friend teacher student
doctor nurse farmer worker driver singer dancer writer painter player keeper
boy girl baby brother sister father mother uncle aunt cousin neighbor king
queen prince princess soldier sailor pilot cook guest host enemy stranger
dog cat horse bird snake rabbit lion tiger elephant monkey bear cow pig hen
duck eagle owl spider insect bee ant butterfly worm frog shark whale seal
head face eye ear nose mouth lip chin neck shoulder arm elbow hand finger
thumb nail chest back leg knee ankle toe skin bone blood heart brain stomach
hair beard smile voice breath step dream thought idea plan reason question
answer problem solution result effect cause purpose goal task job duty habit
skill talent effort success failure mistake error truth lie secret story tale
poem song music sound noise silence light shadow color shape size weight
height length width depth speed distance direction corner edge side middle
center surface bottom top front end beginning part piece bit slice share
group team club crowd crew family couple pair set list line row column page
letter note message report record file folder card ticket bill coin dollar
price cost tax trade market store shop office bank hospital church temple
castle tower bridge tunnel wall gate door window roof floor ceiling stair
room kitchen bathroom bedroom hall cellar attic yard fence pool farm field
meadow forest wood hill mountain valley cliff cave island beach coast shore
river lake pond stream ocean sea wave tide rain snow ice frost fog mist wind
storm thunder cloud sky sun moon star planet space earth ground soil sand
rock stone metal gold silver iron copper glass paper wood cotton wool silk
leather plastic rubber oil gas coal fire flame smoke ash dust dirt mud water
milk juice tea coffee wine beer bread butter cheese cream sugar salt pepper
honey jam soup salad meat beef pork chicken egg rice bean pea corn wheat
flour cake pie cookie candy chocolate fruit grape lemon peach pear plum
cherry berry melon nut vegetable potato tomato onion carrot cabbage lettuce
mushroom garlic dinner lunch breakfast meal snack dish plate bowl cup mug
bottle jar pot pan spoon napkin towel soap brush comb mirror razor scissors
needle thread button pocket collar sleeve shirt coat jacket dress skirt
trousers sock shoe boot hat cap glove scarf belt ring necklace watch glasses
umbrella bag basket box crate sack trunk suitcase wallet purse key lock chain
rope wire nail hammer saw drill screw tool machine engine motor wheel tire
brake pedal handle seat bench sofa couch cushion pillow blanket sheet mattress
bed lamp candle torch bulb switch plug socket battery radio television screen
computer keyboard printer camera film photo picture painting drawing map globe
clock calendar diary journal newspaper magazine novel dictionary bookshelf
desk drawer cupboard closet shelf nail2? basement balcony chimney porch
garage driveway lawn path trail track station airport harbor port deck cabin
tent camp fire2? holiday vacation trip journey tour visit guidebook luggage
passport visa border country nation state province region district town
village suburb capital square park playground zoo museum gallery theater
cinema stadium gym court field2? race game match sport ball bat racket net
goal2? score prize medal trophy winner loser champion coach referee fan
audience stage curtain scene act play actor actress director producer script
camera2? microphone speaker concert band orchestra drum guitar piano violin
flute trumpet horn bell melody rhythm verse chorus dance ballet opera show
festival parade ceremony wedding funeral birthday anniversary gift present
card2? balloon firework feast toast guest2? crowd2? neighbor2? citizen member
leader president minister mayor judge lawyer court2? prison guard police
officer detective thief2? crime proof witness jury verdict law rule order
command permission duty2? right freedom peace war army navy weapon gun sword
shield armor battle victory defeat hero spy agent mission signal code flag
emblem badge uniform rank medal2? honor pride shame fear anger joy sorrow
grief hope despair love hate envy pity mercy courage wisdom knowledge science
nature culture art history geography mathematics physics chemistry biology
medicine health disease illness fever cough cold wound injury pain ache cure
remedy pill drug dose bandage clinic patient surgeon dentist pharmacy
education lesson course lecture exam test2? grade diploma degree certificate
professor pupil classroom blackboard chalk pen pencil eraser ruler notebook
backpack homework holiday2? term semester library laboratory experiment
research theory fact figure number amount sum total half2? quarter third
percent fraction average measure unit meter liter gram ton mile acre degree2?
temperature pressure energy power force motion speed2? gravity magnet
electricity current circuit wire2? signal2? wavelength particle atom molecule
cell tissue organ muscle nerve vein lung liver kidney spine rib skull
""".split()

def en_noun_table(lemma):
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        return "n3"
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        return "n2"
    if lemma.endswith("o") and lemma not in ("photo", "piano", "radio", "zoo", "video"):
        return "n2"
    return "n1"

for n_ in EN_NOUNS:
    if n_.endswith(("2?", "?")):
        continue  # duplicate markers in the list above
    if n_ in EN and "N" in EN[n_]:
        continue
    en(n_, "N", tab=en_noun_table(n_))

# natural-gender nouns get an inherent gender for pronominalization
for w, g in [("boy", "m"), ("girl", "f"), ("father", "m"), ("mother", "f"),
             ("brother", "m"), ("sister", "f"), ("king", "m"), ("queen", "f"),
             ("uncle", "m"), ("aunt", "f"), ("prince", "m"), ("princess", "f"),
             ("actor", "m"), ("actress", "f")]:
    if w in EN and "N" in EN[w]:
        EN[w]["N"]["g"] = g

EN_IRREGULAR_ADJ = {
    "good": ("a4", "better", "best"),
    "bad": ("a4", "worse", "worst"),
    "far": ("a4", "farther", "farthest"),
    "little": ("a4", "less", "least"),
    "much": ("a4", "more", "most"),
}
for lemma, (tab, co, su) in EN_IRREGULAR_ADJ.items():
    en(lemma, "A", tab=tab, irreg={"co": co, "su": su})

EN_DOUBLING_ADJ = {"big": "a5g", "hot": "a5t", "thin": "a5n", "sad": "a5d",
                   "fat": "a5t", "flat": "a5t", "mad": "a5d", "red": "a5d",
                   "wet": "a5t", "slim": "a5m", "dim": "a5m", "grim": "a5m"}
for lemma, tab in EN_DOUBLING_ADJ.items():
    en(lemma, "A", tab=tab)

EN_GRADABLE_ADJ = """
tall small old young long strong high low fast slow hard soft warm cool cold
dark rich poor deep clean clear cheap great kind loud proud quick sharp smart
sweet thick tough weak bright calm fair fresh full near new plain rough round
short smooth steep stiff tight bold light neat quiet?? slow2?
""".split()

EN_E_ADJ = "nice large wide late safe brave close loose pale rare ripe rude wise fine pure".split()
EN_Y_ADJ = """
happy angry busy dirty easy empty funny heavy hungry lazy lucky noisy pretty
ready silly sleepy sunny thirsty tidy tiny ugly windy healthy wealthy friendly
lonely lovely early
""".split()
EN_PERIPHRASTIC_ADJ = """
beautiful interesting important different difficult dangerous expensive famous
careful helpful useful useless painful peaceful powerful wonderful terrible
horrible possible probable visible flexible comfortable reasonable valuable
suitable available ancient modern common certain correct perfect complete
serious curious various nervous jealous generous delicious precious obvious
patient silent distant instant pleasant present absent frequent violent
intelligent excellent innocent urgent elegant ignorant brilliant significant
english french foreign native local national international global general
special official formal final original normal natural personal physical
mental social political economic electric electronic automatic romantic
fantastic realistic optimistic artistic domestic public private secret?? open
broken hidden golden wooden woolen rotten sudden stolen frozen
""".split()

for a in EN_GRADABLE_ADJ:
    if a.endswith("?") or a.endswith("2?"):
        continue
    if a in EN and "A" in EN[a]:
        continue
    en(a, "A", tab="a1")
for a in EN_E_ADJ:
    if a in EN and "A" in EN[a]:
        continue
    en(a, "A", tab="a2")
for a in EN_Y_ADJ:
    if a in EN and "A" in EN[a]:
        continue
    en(a, "A", tab="a3")
for a in EN_PERIPHRASTIC_ADJ:
    if a.endswith("??"):
        continue
    if a in EN and "A" in EN[a]:
        continue
    en(a, "A", tab="a4")
en("English", "A", tab="a4")
en("French", "A", tab="a4")

EN_ADVERBS = """
now not here there well often never ever always sometimes usually rarely
seldom again soon already yet still almost quite very too also just only even
really certainly probably perhaps maybe together apart away back forward
everywhere nowhere somewhere anywhere today tomorrow yesterday tonight
quickly slowly carefully quietly loudly happily sadly easily hardly nearly
badly deeply freely fully gently kindly lately mostly namely partly shortly
simply softly strongly suddenly surely truly weekly daily monthly early late
fast hard high low once twice
""".split()
for adv in EN_ADVERBS:
    if adv in EN and "Adv" in EN[adv]:
        continue
    en(adv, "Adv", tab="adv0")

# ---------------------------------------------------------------------
# French
# ---------------------------------------------------------------------

FR = {}

def fr(lemma, pos, **feat):
    entry = FR.setdefault(lemma, {})
    if pos in entry:
        raise SystemExit(f"duplicate fr entry {lemma}/{pos}")
    entry[pos] = feat

# determiners
fr("le", "D", tab="dle")
fr("un", "D", tab="dun")
fr("ce", "D", tab="dce")
fr("du", "D", tab="dde")
fr("mon", "D", tab="dmon")
fr("ton", "D", tab="dmon")
fr("son", "D", tab="dmon")
fr("notre", "D", tab="dnotre")
fr("votre", "D", tab="dnotre")
fr("leur", "D", tab="dleur")
fr("quel", "D", tab="dquel")
fr("chaque", "D", tab="dinv")
fr("plusieurs", "D", tab="dinv", n="p")
fr("quelques", "D", tab="dinv", n="p")
fr("tout", "D", tab="dinv")

# pronouns
fr("je", "Pro", tab="pnf")
fr("tu", "Pro", tab="pnf")
fr("il", "Pro", tab="pnf", g="m")
fr("elle", "Pro", tab="pnf", g="f")
fr("nous", "Pro", tab="pnf", n="p")
fr("vous", "Pro", tab="pnf", n="p")
fr("ils", "Pro", tab="pnf", g="m", n="p")
fr("elles", "Pro", tab="pnf", g="f", n="p")
fr("moi", "Pro", tab="pnf")
fr("toi", "Pro", tab="pnf")
fr("lui", "Pro", tab="pnf", g="m")
fr("eux", "Pro", tab="pnf", g="m", n="p")
fr("me", "Pro", tab="pnf")
fr("te", "Pro", tab="pnf")
fr("se", "Pro", tab="pnf")
fr("y", "Pro", tab="pnfI")
fr("en", "Pro", tab="pnfI")

# prepositions and conjunctions
for p in ["à", "de", "dans", "sur", "sous", "derrière", "devant", "avec",
          "par", "pour", "pendant", "avant", "après", "depuis", "chez", "en",
          "vers", "entre", "contre", "sans", "selon", "malgré", "jusque"]:
    fr(p, "P", tab="")
for c in ["et", "ou", "mais", "que", "quand", "si", "car", "donc", "puisque",
          "lorsque", "comme"]:
    fr(c, "C", tab="")

# auxiliary and irregular verbs bound to dedicated tables
for lemma, tab, aux in [("avoir", "vfavoir", "av"), ("être", "vfêtre", "av"),
                        ("aller", "vfaller", "êt"), ("pouvoir", "vfpouvoir", "av"),
                        ("devoir", "vfdevoir", "av"), ("vouloir", "vfvouloir", "av"),
                        ("faire", "vffaire", "av"), ("dire", "vfdire", "av"),
                        ("voir", "vfvoir", "av"), ("savoir", "vfsavoir", "av"),
                        ("venir", "vfvenir", "êt"), ("prendre", "vfprendre", "av"),
                        ("mettre", "vfmettre", "av")]:
    fr(lemma, "V", tab=tab, aux=aux)

FR_ER_VERBS = """
donner aimer parler trouver penser acheter?? demander accepter calculer
implémenter chanter danser jouer marcher travailler habiter regarder écouter
montrer porter fermer laisser passer rester arriver tomber entrer retourner
monter garder toucher tirer pousser frapper sauter voler couper laver
casser brûler cacher chercher compter coûter crier dessiner deviner
dîner discuter douter échouer éclairer économiser embrasser emporter
emprunter enseigner étudier éviter expliquer fabriquer fêter fumer gagner
goûter griller guider inviter jeter?? juger?? klaxonner libérer?? livrer
louer mériter mesurer noter oublier pardonner partager?? payer?? pêcher
peindre?? photographier pleurer plier poser préparer présenter prêter
profiter promener?? prononcer?? proposer protéger?? prouver quitter raconter
ramasser ranger?? rappeler?? refuser regretter remarquer remercier remplacer??
remplir?? rencontrer rentrer réparer répéter?? répondre?? réserver respecter
respirer ressembler réussir?? rêver saluer sauver sécher?? sembler séparer
serrer signer skier sonner souhaiter soulever?? souligner soupirer sourire??
téléphoner terminer tuer utiliser vérifier verser visiter vider voyager??
accompagner accrocher accuser admirer adorer affirmer aider ajouter allumer
améliorer amuser apporter approcher approuver arrêter arroser
assurer attacher attirer attraper augmenter avancer?? avouer baisser
bavarder bloquer bouger?? briller brosser calmer causer céder?? célébrer??
charger?? chauffer chuchoter circuler coller combler commander comparer
compléter?? composer comprendre?? confier confirmer conseiller conserver
considérer?? consoler constater consulter contempler continuer contrôler
copier corriger?? coucher couler créer creuser critiquer croiser cultiver
débuter décider déclarer décorer découper décrire?? dégager déjeuner
démarrer déménager?? demeurer dépasser dépenser déposer déranger?? désirer
dessiner2? détester détruire?? développer deviner2? dévorer dicter diriger??
disposer distribuer divorcer?? dominer donner3? doubler dresser durer
échanger?? éclater écraser effacer?? effrayer?? élever?? éliminer emmener??
empêcher employer?? encourager?? endommager?? enfermer enlever?? ennuyer??
enregistrer entourer entraîner envahir?? envelopper envier envoyer?? épouser
éprouver épuiser errer espérer?? essayer?? essuyer?? estimer établir??
étonner étouffer évoquer exagérer?? examiner exciter exécuter exiger??
exister exposer exprimer féliciter fixer flotter fonder former fouiller
fournir?? franchir?? frotter gâter geler?? gêner glisser gonfler grimper
gronder grouper habiller hésiter honorer?? identifier imaginer imiter
importer imposer imprimer indiquer informer installer insister inspirer
intéresser interroger?? interrompre?? inventer jurer justifier lâcher
lancer?? limiter loger?? lutter manquer marquer menacer?? mener?? mentionner
moderniser modifier multiplier murmurer naviguer négliger?? nommer nourrir??
obliger?? observer occuper offrir?? opérer?? opposer ordonner organiser
orner oser ôter pencher pénétrer?? percer permettre?? persuader peser??
piquer placer?? plaindre?? plaisanter planter pleuvoir?? poursuivre??
pratiquer précéder?? préciser préférer?? priver provoquer publier puiser
punir?? ramener?? rassurer réagir?? recevoir?? réclamer récolter recommander
récompenser réconforter reconnaître?? recopier rectifier reculer rédiger??
redouter réfléchir?? refléter?? régler?? régner?? rejeter?? rejoindre??
relever?? relier remonter remuer renoncer?? renverser renvoyer?? répandre??
repasser repérer?? replacer?? reposer repousser représenter réserver2?
résister résoudre?? ressentir?? retenir?? retirer retrouver réveiller
révéler?? revenir?? réviser revoir?? risquer rouler
""".split()

FR_GER_VERBS = """
manger nager voyager ranger partager changer charger juger bouger déranger
déménager échanger encourager endommager interroger loger mélanger négliger
obliger plonger prolonger rédiger songer diriger corriger exiger
arranger venger allonger engager
""".split()

FR_CER_VERBS = """
commencer avancer lancer placer annoncer prononcer divorcer effacer menacer
percer remplacer forcer renoncer tracer déplacer exercer
""".split()

FR_IR2_VERBS = """
finir choisir réussir remplir grandir grossir maigrir vieillir rougir pâlir
guérir punir réfléchir obéir réagir bâtir nourrir applaudir atterrir avertir
bénir éclaircir enrichir envahir établir fleurir fournir franchir garantir
gémir investir jaillir mincir mûrir noircir obscurcir périr ralentir ravir
saisir salir subir surgir trahir unir verdir vomir
""".split()

FR_RE_VERBS = """
vendre attendre entendre répondre perdre rendre descendre défendre dépendre
prétendre confondre correspondre fondre mordre pendre tendre tondre suspendre
""".split()

FR_ER_AVOIDED = {w for w in FR_ER_VERBS if w.endswith("??") or w.endswith("2?") or w.endswith("3?")}

ETRE_VERBS = {"arriver", "rester", "tomber", "entrer", "rentrer", "retourner",
              "monter", "passer", "venir", "aller"}

for v in FR_ER_VERBS:
    if v in FR_ER_AVOIDED or v.endswith("?"):
        continue
    if v in FR and "V" in FR[v]:
        continue
    fr(v, "V", tab="vf1", aux=("êt" if v in ETRE_VERBS else "av"))
for v in FR_GER_VERBS:
    if v.endswith("?"):
        continue
    if v in FR and "V" in FR[v]:
        continue
    fr(v, "V", tab="vf1g", aux="av")
for v in FR_CER_VERBS:
    if v.endswith("?"):
        continue
    if v in FR and "V" in FR[v]:
        continue
    fr(v, "V", tab="vf1c", aux="av")
for v in FR_IR2_VERBS:
    if v in FR and "V" in FR[v]:
        continue
    fr(v, "V", tab="vf2", aux="av")
for v in FR_RE_VERBS:
    if v in FR and "V" in FR[v]:
        continue
    fr(v, "V", tab="vf3", aux="av")

# nouns: (word, gender); table by suffix unless overridden
FR_NOUN_OVERRIDES = {
    "bus": "nf2", "tapis": "nf2", "repas": "nf2", "mois": "nf2", "pays": "nf2",
    "temps": "nf2", "corps": "nf2", "bras": "nf2", "dos": "nf2", "prix": "nf2",
    "voix": "nf2", "choix": "nf2", "croix": "nf2", "nez": "nf2", "gaz": "nf2",
    "fois": "nf2", "bois": "nf2", "souris": "nf2", "paix": "nf2", "noix": "nf2",
    "cheval": "nf3", "journal": "nf3", "animal": "nf3", "hôpital": "nf3",
    "canal": "nf3", "métal": "nf3", "signal": "nf3", "cristal": "nf3",
    "général": "nf3", "capital": "nf3", "végétal": "nf3", "rival": "nf3",
    "tribunal": "nf3", "festival": "nf1", "bal": "nf1", "carnaval": "nf1",
    "travail": "nf5", "vitrail": "nf5", "corail": "nf5", "émail": "nf5",
    "bateau": "nf4", "château": "nf4", "oiseau": "nf4", "gâteau": "nf4",
    "cadeau": "nf4", "chapeau": "nf4", "manteau": "nf4", "couteau": "nf4",
    "drapeau": "nf4", "bureau": "nf4", "tableau": "nf4", "morceau": "nf4",
    "rideau": "nf4", "niveau": "nf4", "cerveau": "nf4", "réseau": "nf4",
    "ruisseau": "nf4", "troupeau": "nf4", "berceau": "nf4", "anneau": "nf4",
    "agneau": "nf4", "barreau": "nf4", "plateau": "nf4", "pinceau": "nf4",
    "jeu": "nf4", "feu": "nf4", "lieu": "nf4", "cheveu": "nf4", "neveu": "nf4",
    "vœu": "nf4", "milieu": "nf4", "adieu": "nf4", "dieu": "nf4",
}

FR_NOUNS_F = """
pomme orange banane fille femme dame personne position phrase coordination
option forme maison voiture table chaise porte fenêtre route rue ville plage
montagne rivière mer terre lune étoile nuit journée semaine année heure
minute seconde chose idée histoire guerre paix eau pluie neige fleur feuille
herbe forêt plante pierre tête main jambe bouche dent oreille peau famille
mère sœur école classe leçon page lettre langue musique chanson viande soupe
salade poire fraise cerise tomate carotte assiette tasse bouteille cuisine
chambre salle clé montre robe chemise poche chaussure valise carte photo
radio banque église gare place poste boutique usine ferme cour cave échelle
armoire lampe bougie étagère corbeille casserole fourchette cuillère
serviette nappe couverture laine soie pièce cloche cloison brique tuile
vitre poutre planche scie pelle aiguille épingle ficelle corde chaîne colle
peinture encre craie gomme règle trousse affiche image loi justice police
prison preuve faute peine victoire défaite armée marine arme épée flèche
bataille frontière patrie nation capitale région province commune mairie
rive côte île vallée colline falaise grotte source cascade boue poussière
cendre flamme fumée chaleur couleur douceur douleur erreur faveur fraîcheur
grandeur hauteur horreur humeur largeur lenteur longueur lueur odeur peur
profondeur rigueur rumeur saveur splendeur sueur terreur valeur vapeur
vigueur liberté beauté bonté vérité santé société qualité quantité sécurité
réalité activité actualité autorité capacité cité clarté communauté
complexité curiosité difficulté dignité diversité égalité électricité
éternité facilité fidélité fierté fraternité générosité gravité humanité
humidité identité intensité intimité majorité minorité mobilité modernité
nationalité nécessité personnalité possibilité priorité probabilité propreté
propriété proximité publicité rapidité rareté responsabilité simplicité
solidarité stabilité timidité tranquillité unité université utilité validité
variété vitalité volonté information nation station création situation
question solution décision éducation production organisation population
relation révolution tradition collection direction élection émotion exception
fonction génération impression inscription institution intention intervention
invitation opération opinion portion possession préparation présentation
profession proposition protection publication réaction réception réduction
région religion répétition réputation réservation résolution respiration
restriction réunion satisfaction section sélection sensation séparation
session signification suggestion télévision tension tentation traduction
transformation version vision attention addition définition condition
animation administration application association augmentation célébration
circulation collaboration combinaison comparaison composition compréhension
concentration conclusion confusion connaissance naissance reconnaissance
croissance assurance confiance distance importance instance substance
vengeance ambulance balance correspondance danse dépense défense offense
réponse chance branche hanche planche avalanche grange
louange mésange phalange vidange vendange plage
page cage image nage rage luge loge horloge tige
allure aventure blessure brûlure candidature ceinture chevelure
clôture couture créature culture coiffure confiture fermeture figure
fourniture lecture mesure nature nourriture ouverture procédure
signature structure température torture vitesse adresse
caresse faiblesse jeunesse maîtresse noblesse paresse politesse promesse
richesse sagesse tendresse tristesse vieillesse voix croix fois noix
""".split()

FR_NOUNS_M = """
paramètre élément passif objet constituant avertissement lexique monde
bonjour arbre avion homme garçon père frère fils oncle ami bébé chien chat
poisson lapin mouton cochon canard lion tigre ours loup renard singe serpent
insecte papillon jardin bois champ chemin pont mur toit plancher plafond
escalier lit fauteuil miroir livre cahier crayon stylo papier train vélo
camion métro taxi pain beurre fromage sucre sel lait café thé vin jus
déjeuner dîner soir matin jour an siècle état roi prince soldat client
patron voisin invité métier argent marché magasin restaurant hôtel musée
théâtre cinéma parc stade jouet ballon ciel soleil vent bruit silence mot
nom numéro problème système programme groupe exemple texte titre genre
centre cercle carré cœur esprit doigt pied ventre visage front cou menton
estomac muscle squelette sang souffle geste regard sourire rire cri chant
bonheur malheur plaisir désir espoir souvenir avenir passé présent futur
destin hasard mystère secret mensonge récit conte poème roman journal2?
dictionnaire chapitre paragraphe alinéa verbe adjectif adverbe sujet
complément accord genre2? nombre singulier pluriel masculin féminin exercice
devoir2? examen diplôme certificat professeur élève étudiant tableau2?
pupitre banc couloir préau gymnase terrain but score match sport jeu2?
tournoi champion arbitre entraîneur joueur spectateur public billet prix2?
trophée médaillé?? casque maillot short gant filet panier vélodrome circuit
moteur volant frein phare coffre capot pneu réservoir garage atelier outil
marteau clou tournevis fil bouton tissu cuir coton velours chiffon balai
seau savon rasoir peigne flacon parfum coffret tiroir placard buffet vase
cadre socle pilier balcon grenier sous-sol?? couloir2? vestibule salon
fourneau réfrigérateur congélateur évier robinet tuyau égout compteur
interrupteur courant câble écran clavier ordinateur imprimante téléphone
portable appareil réveil cadran ressort rouage engrenage levier bouton2?
signal2? panneau feu2? carrefour trottoir passage piéton quartier immeuble
étage ascenseur palier logement loyer propriétaire locataire concierge
facteur courrier colis timbre guichet formulaire dossier contrat salaire
impôt budget compte billet2? chèque crédit débit intérêt bénéfice commerce
produit stock rayon caddie panier2? comptoir vendeur acheteur fournisseur
entrepôt usager?? appartement argument bâtiment changement chargement
classement commencement comportement département développement document
enseignement entraînement environnement équipement événement gouvernement
instrument jugement logement2? médicament mouvement moment monument paiement
parlement règlement sentiment supplément traitement vêtement âge bagage
courage étage2? garage2? langage mariage message ménage nuage orage passage2?
paysage personnage village visage2? voyage avantage barrage chauffage
dommage entourage héritage maquillage massage naufrage ouvrage partage
potage rivage stage témoignage usage virage capitalisme classicisme cyclisme
dynamisme égoïsme journalisme mécanisme optimisme organisme réalisme
socialisme tourisme acteur auteur chanteur chauffeur chercheur coiffeur
conducteur danseur directeur docteur éditeur employeur facteur2? fumeur
ingénieur inspecteur instituteur lecteur menteur moteur2? ordinateur2?
pêcheur porteur secteur serveur skieur spectateur2? traducteur travailleur
vendeur2? visiteur voleur voyageur boulanger boucher épicier fermier berger
jardinier cuisinier pompier policier ouvrier écolier cavalier chevalier
sentier panier3? escalier2? quartier2? papier2? clocher rocher verger
""".split()

FR_H_ASPIRE = {"héros", "haricot", "hibou", "homard", "hockey", "hasard",
               "hangar", "handicap", "hérisson", "héron", "hameau", "hanche",
               "hauteur"}

def fr_noun_table(lemma):
    if lemma in FR_NOUN_OVERRIDES:
        return FR_NOUN_OVERRIDES[lemma]
    if lemma.endswith(("s", "x", "z")):
        return "nf2"
    if lemma.endswith(("eau", "eu")):
        return "nf4"
    if lemma.endswith("al"):
        return "nf3"
    return "nf1"

# nouns only reachable through table overrides, plus the h-aspire set
FR_EXTRA_NOUNS = [
    ("bus", "m"), ("tapis", "m"), ("repas", "m"), ("mois", "m"), ("pays", "m"),
    ("temps", "m"), ("corps", "m"), ("bras", "m"), ("dos", "m"), ("prix", "m"),
    ("choix", "m"), ("nez", "m"), ("gaz", "m"), ("bois", "m"), ("souris", "f"),
    ("cheval", "m"), ("journal", "m"), ("animal", "m"), ("hôpital", "m"),
    ("canal", "m"), ("métal", "m"), ("signal", "m"), ("cristal", "m"),
    ("général", "m"), ("capital", "m"), ("végétal", "m"), ("rival", "m"),
    ("tribunal", "m"), ("festival", "m"), ("bal", "m"), ("carnaval", "m"),
    ("travail", "m"), ("vitrail", "m"), ("corail", "m"), ("émail", "m"),
    ("bateau", "m"), ("château", "m"), ("oiseau", "m"), ("gâteau", "m"),
    ("cadeau", "m"), ("chapeau", "m"), ("manteau", "m"), ("couteau", "m"),
    ("drapeau", "m"), ("bureau", "m"), ("tableau", "m"), ("morceau", "m"),
    ("rideau", "m"), ("niveau", "m"), ("cerveau", "m"), ("réseau", "m"),
    ("ruisseau", "m"), ("troupeau", "m"), ("berceau", "m"), ("anneau", "m"),
    ("agneau", "m"), ("barreau", "m"), ("plateau", "m"), ("pinceau", "m"),
    ("jeu", "m"), ("feu", "m"), ("lieu", "m"), ("cheveu", "m"), ("neveu", "m"),
    ("vœu", "m"), ("milieu", "m"), ("adieu", "m"), ("dieu", "m"),
    ("héros", "m"), ("haricot", "m"), ("hibou", "m"), ("homard", "m"),
    ("hockey", "m"), ("hameau", "m"), ("hérisson", "m"), ("héron", "m"),
]
FR_NOUN_OVERRIDES["hibou"] = "nf4"
FR_NOUN_OVERRIDES["hameau"] = "nf4"

for group, gender in ((FR_NOUNS_F, "f"), (FR_NOUNS_M, "m")):
    for n_ in group:
        if "?" in n_ or n_.endswith(("2?", "3?")):
            continue
        if n_ in FR and "N" in FR[n_]:
            continue
        feat = {"tab": fr_noun_table(n_), "g": gender}
        if n_ in FR_H_ASPIRE:
            feat["h"] = True
        fr(n_, "N", **feat)

for n_, g in FR_EXTRA_NOUNS:
    if n_ in FR and "N" in FR[n_]:
        continue
    feat = {"tab": fr_noun_table(n_), "g": g}
    if n_ in FR_H_ASPIRE:
        feat["h"] = True
    fr(n_, "N", **feat)

FR_ADJ = {
    # table af1: regular
    "af1": """grand petit fort lourd haut droit froid chaud lent prochain
      certain plein vilain humain commun brun clair noir dur pur sûr amusant
      charmant content courant différent excellent important intelligent
      intéressant méchant puissant souriant suivant vivant élégant prudent
      récent urgent présent absent ouvert vert court étroit adroit parfait
      laid chacun?? espagnol allemand anglais2?? américain africain marocain
      mexicain romain voisin fin divin enfantin féminin masculin argentin""",
    # af2: e-final, invariable in gender
    "af2": """rouge vide jaune rose pâle calme triste propre sale large mince
      jeune2?? libre pauvre riche?? aimable adorable agréable capable
      confortable durable énorme immense moderne fragile facile difficile
      utile inutile agile habile fertile hostile mobile fidèle célèbre
      rapide solide timide stupide malade magnifique magique unique
      pratique physique logique publique?? électrique classique comique
      dynamique énergique exotique fantastique historique identique
      ironique poétique politique rustique sympathique typique drôle
      étrange sauvage sage chauve correcte?? juste proche digne""",
    # af3: -eux
    "af3": """heureux malheureux dangereux courageux curieux furieux sérieux
      délicieux précieux joyeux nerveux paresseux peureux généreux orgueilleux
      merveilleux nombreux amoureux douloureux ennuyeux fameux honteux
      lumineux mystérieux neigeux nuageux paresseux2?? pluvieux poussiéreux
      savoureux soyeux venteux vigoureux""",
    # af4: -er / -ère
    "af4": """premier dernier léger cher fier étranger entier amer régulier
      familier grossier particulier singulier""",
    # af5n: -on/-en doubling n
    "af5n": """bon mignon breton ancien parisien canadien italien musicien
      quotidien moyen""",
    # af5l: -il/-ul/-el doubling l
    "af5l": """gentil nul cruel naturel officiel réel actuel annuel habituel
      individuel manuel mutuel professionnel traditionnel universel visuel
      éternel maternel paternel personnel solennel""",
    # af6: -f -> -ve
    "af6": """neuf vif actif attentif créatif naïf négatif positif sportif
      émotif festif captif craintif hâtif massif passif2?? plaintif tardif""",
    # af8: -s -> -sse
    "af8": """gros bas las gras épais""",
    # af9: s-final, same masculine plural
    "af9": """mauvais français anglais gris précis assis confus divers
      compris surpris soumis exquis niais courtois chinois japonais
      hollandais irlandais écossais polonais portugais""",
}
for tab, words in FR_ADJ.items():
    for a in words.split():
        if "?" in a:
            continue
        if a in FR and "A" in FR[a]:
            continue
        fr(a, "A", tab=tab)

# irregular adjectives with prevocalic forms handled by euphony
fr("beau", "A", tab="af7")
fr("nouveau", "A", tab="af7")
fr("vieux", "A", tab="af2",
   irreg={"ms": "vieux", "fs": "vieille", "mp": "vieux", "fp": "vieilles"})
fr("fou", "A", tab="af1",
   irreg={"ms": "fou", "fs": "folle", "mp": "fous", "fp": "folles"})
fr("mou", "A", tab="af1",
   irreg={"ms": "mou", "fs": "molle", "mp": "mous", "fp": "molles"})
fr("blanc", "A", tab="af1",
   irreg={"ms": "blanc", "fs": "blanche", "mp": "blancs", "fp": "blanches"})
fr("long", "A", tab="af1",
   irreg={"ms": "long", "fs": "longue", "mp": "longs", "fp": "longues"})
fr("frais", "A", tab="af9",
   irreg={"ms": "frais", "fs": "fraîche", "mp": "frais", "fp": "fraîches"})
fr("sec", "A", tab="af1",
   irreg={"ms": "sec", "fs": "sèche", "mp": "secs", "fp": "sèches"})
fr("doux", "A", tab="af2",
   irreg={"ms": "doux", "fs": "douce", "mp": "doux", "fp": "douces"})
fr("faux", "A", tab="af2",
   irreg={"ms": "faux", "fs": "fausse", "mp": "faux", "fp": "fausses"})
fr("meilleur", "A", tab="af1")
fr("joli", "A", tab="af1")
fr("vrai", "A", tab="af1")
fr("poli", "A", tab="af1")
fr("fatigué", "A", tab="af1")
fr("âgé", "A", tab="af1")
fr("carré", "A", tab="af1")
fr("cassé", "A", tab="af1")
fr("fermé", "A", tab="af1")
fr("marié", "A", tab="af1")
fr("occupé", "A", tab="af1")
fr("passionné", "A", tab="af1")
fr("préféré", "A", tab="af1")
fr("privé", "A", tab="af1")
fr("salé", "A", tab="af1")
fr("sucré", "A", tab="af1")

FR_ADVERBS = """
non maintenant ici là bien mal souvent jamais toujours parfois rarement
encore déjà bientôt aussitôt enfin ensuite puis alors ainsi aussi trop très
assez presque plutôt seulement vraiment peut-être ensemble ailleurs partout
nulle-part?? dehors dedans dessus dessous autour loin près tôt tard vite
lentement doucement facilement difficilement heureusement malheureusement
rapidement simplement certainement probablement également évidemment
précisément immédiatement directement parfaitement complètement extrêmement
naturellement normalement généralement spécialement finalement réellement
sérieusement tranquillement attentivement librement poliment gentiment
fièrement fortement légèrement longuement joyeusement tristement froidement
chaudement clairement obscurément secrètement ouvertement publiquement
demain hier aujourd'hui??
""".split()
for adv in FR_ADVERBS:
    if "?" in adv:
        continue
    if adv in FR and "Adv" in FR[adv]:
        continue
    fr(adv, "Adv", tab="advf")

# ---------------------------------------------------------------------
# emit
# ---------------------------------------------------------------------

def clean(table):
    out = {}
    for lemma in sorted(table):
        out[lemma] = {}
        for pos in sorted(table[lemma]):
            out[lemma][pos] = {k: v for k, v in table[lemma][pos].items()
                               if not (k == "tab" and v == "")}
    return out

def count(table):
    return sum(len(v) for v in table.values())

def main():
    for name, table in (("lexicon-en.json", EN), ("lexicon-fr.json", FR)):
        with open(name, "w", encoding="utf-8") as f:
            json.dump(clean(table), f, ensure_ascii=False, indent=0, sort_keys=True)
            f.write("\n")
    n_en, n_fr = count(EN), count(FR)
    print(f"lexicon-en.json: {n_en} entries")
    print(f"lexicon-fr.json: {n_fr} entries")
    if n_en < 1200 or n_fr < 1200:
        print("warning: desk-scale target is about 2000 entries per language",
              file=sys.stderr)

if __name__ == "__main__":
    main()
