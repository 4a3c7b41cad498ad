#!/usr/bin/env python3
"""Regenerates the bundled sample corpus and dictionary.

Posts are synthetic: words are drawn Zipf-style from a fixed vocabulary and
dressed with hashtags, mentions, links, numbers and the odd typo, so every
preprocessing rule gets exercised. Output is deterministic.
"""
import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

FUNCTION = """the a an and or but if then so of to in on at by for with from about as into over under
after before between through during without within against among this that these those it its
they them their we us our you your he him his she her i me my is are was were be been being
have has had do does did not no yes all any some many much more most less few each every other
such only very too just also still even again ever never always often here there now when where
why how what which who whom whose than because while until since though although whether""".split()

EMOTION = {
    "joy": "happy joy glad delight cheer celebrate pleasure smile laugh hope proud wonderful great brilliant "
           "excellent fantastic lovely thrill elated bliss grateful win success",
    "trust": "trust faith believe confident rely loyal honest reliable safe secure support promise "
             "assure friend ally respect agree dependable",
    "fear": "fear afraid scared worry anxious panic terror dread alarm threat danger risk nervous "
            "frighten horror uncertain chaos crisis",
    "surprise": "surprise shock astonish amaze unexpected sudden stun wow startle remarkable incredible "
                "unbelievable twist",
    "sadness": "sad sorrow grief loss mourn regret miserable gloom despair depress unhappy tragic "
               "disappoint lonely hurt cry heartbreak",
    "disgust": "disgust awful vile gross nasty shame sick revolting dirty corrupt rotten filthy "
               "hypocrite pathetic sleazy",
    "anger": "anger angry furious rage outrage hate betray fury mad annoy resent hostile attack blame "
             "fight insult bitter",
    "anticipation": "expect await anticipate plan prepare future soon forecast predict deadline "
                    "prospect upcoming vote await eager",
}
INTENSIFY = """absolutely totally completely utterly extremely really truly highly deeply seriously
incredibly hugely massively entirely fully barely hardly slightly somewhat rather fairly partly
scarcely mildly nearly almost quite""".split()

NOUNS = """government parliament minister deal border trade market economy country nation people voter
election referendum campaign party leader speech debate law rule court treaty union customs tariff
agreement negotiation talk meeting summit week month year day time money pound euro price cost tax
job worker business company industry farmer fisherman bank city town village island region coast
port lorry truck queue shop supply food medicine hospital school student family child parent
citizen passport visa right freedom power control sovereignty democracy majority minority opinion
poll survey result report news paper article headline journalist media channel interview question
answer problem issue solution option choice idea plan strategy policy proposal amendment motion bill
letter extension delay backstop withdrawal exit departure arrival border checkpoint fence wall bridge
road rail train ferry plane airport flight holiday tourist pension home house street neighbour
community society history future past present generation youth elder friend enemy neighbour partner
member committee cabinet chancellor secretary spokesman official diplomat ambassador envoy commission
council assembly office department agency authority regulator standard regulation product export
import investment investor fund growth recession inflation currency wage salary income benefit
welfare health service nurse doctor teacher police army navy soldier security defence fish water
energy oil gas farm crop land field sea river mountain weather rain storm wind sun morning evening
night tomorrow yesterday today hour minute moment second century decade""".split()

VERBS = """vote leave remain stay go come make take give get keep let put say tell ask speak talk
discuss argue negotiate decide choose accept reject approve refuse sign agree delay extend cancel
announce claim deny admit warn urge call demand need want like love wish hope believe think know
understand explain show prove report publish read write watch listen hear see look seem appear
become change move travel cross return arrive depart open close start stop finish continue begin
end build break fix solve create destroy lose gain earn spend pay cost buy sell trade export import
invest grow rise fall drop increase decrease reduce improve worsen protect defend attack block allow
permit prevent force push pull follow lead manage govern rule control vote campaign protest march
gather meet join split divide unite share count check test work live die help hurt save waste
risk fear trust blame praise thank criticise question answer respond react resign replace elect
appoint hire fire charge cover""".split()

ADJ = """big small large little long short high low new old young good bad best worst better worse
real true false right wrong clear unclear simple hard easy difficult possible impossible likely
unlikely important major minor final early late fair unfair free open closed public private
national local european british english irish scottish welsh french german global foreign domestic
economic political social legal financial official formal democratic strong weak rich poor cheap
expensive full empty ready certain sure available common rare strange normal special general
particular whole single double hard soft quick slow clearly simply strongly quickly slowly
finally really surely openly publicly""".split()

EXTRA_POLITICS = """brexit brexiteer remainer leaver tory labour liberal conservative westminster
brussels whitehall downing unionist nationalist independence federal""".split()


def inflect_verb(v):
    forms = {v}
    if v.endswith("e"):
        forms |= {v + "s", v + "d", v[:-1] + "ing"}
    elif v.endswith("y") and v[-2] not in "aeiou":
        forms |= {v[:-1] + "ies", v[:-1] + "ied", v + "ing"}
    elif v.endswith(("s", "sh", "ch", "x")):
        forms |= {v + "es", v + "ed", v + "ing"}
    else:
        forms |= {v + "s", v + "ed", v + "ing"}
    return forms


def pluralise(n):
    if n.endswith("y") and n[-2] not in "aeiou":
        return {n, n[:-1] + "ies"}
    if n.endswith(("s", "sh", "ch", "x")):
        return {n, n + "es"}
    return {n, n + "s"}


def build_vocabulary():
    words = set(FUNCTION) | set(INTENSIFY) | set(EXTRA_POLITICS)
    for lst in EMOTION.values():
        for w in lst.split():
            words.add(w)
    for n in NOUNS:
        words |= pluralise(n)
    for v in VERBS:
        words |= inflect_verb(v)
    words |= set(ADJ)
    return sorted(words)


def main():
    rng = random.Random(20190329)
    vocab = build_vocabulary()
    ranked = list(vocab)
    rng.shuffle(ranked)
    # function words dominate real text; put them at the top of the ranking
    ranked.sort(key=lambda w: 0 if w in FUNCTION else 1)
    weights = [1.0 / (r + 1) for r in range(len(ranked))]

    typos = ["brexshit", "govt", "tbh", "lol", "omg", "smh", "ppl", "u", "imo", "wtf", "gonna", "wanna"]
    handles = ["@eu_watch", "@uk_politics", "@newsdesk", "@citizen_kim", "@farmers_union", "@port_of_dover"]
    tags = ["#brexit", "#Brexit", "#brexitdeal", "#PeoplesVote", "#StopBrexit", "#LeaveMeansLeave"]
    lines = []
    start = 1551398400  # 2019-03-01T00:00:00Z
    for i in range(520):
        n = rng.randint(8, 26)
        tokens = rng.choices(ranked, weights=weights, k=n)
        if i % 17 != 5:  # a few posts never mention the keyword
            pos = rng.randrange(len(tokens) + 1)
            tokens.insert(pos, rng.choice(["brexit", "Brexit", "BREXIT", "brexit's"] + tags))
        if rng.random() < 0.25:
            tokens.append(rng.choice(handles))
        if rng.random() < 0.2:
            tokens.insert(0, rng.choice(handles))
        if rng.random() < 0.2:
            tokens.append(rng.choice(["https://t.co/x" + str(i), "http://bbc.co.uk/news/" + str(i),
                                      "www.example.org/brexit-" + str(i)]))
        if rng.random() < 0.15:
            tokens.insert(rng.randrange(len(tokens)), str(rng.randint(2, 2020)))
        if rng.random() < 0.3:
            tokens.insert(rng.randrange(len(tokens)), rng.choice(typos))
        text = " ".join(tokens)
        text = text[0].upper() + text[1:]
        text += rng.choice([".", "!", "?", "!!", "...", ""])
        ts = start + i * 3637 + rng.randint(0, 600)
        stamp = __import__("datetime").datetime.utcfromtimestamp(ts).strftime("%Y-%m-%dT%H:%M:%SZ")
        if rng.random() < 0.5:
            post = {"source": "reddit", "id": f"r{i:04d}", "text": text, "timestamp": stamp,
                    "engagement": {"upvotes": rng.randint(0, 900)}}
        else:
            post = {"source": "twitter", "id": f"t{i:04d}", "text": text, "timestamp": stamp,
                    "engagement": {"retweets": rng.randint(0, 300), "favourites": rng.randint(0, 1200)}}
            if rng.random() < 0.4:
                post["location"] = rng.choice(["London", "Manchester", "Belfast", "Glasgow", "Dublin", "Dover"])
        lines.append(json.dumps(post, ensure_ascii=False))
    # malformed records the ingester must skip with a warning
    lines.insert(100, '{"source": "reddit", "id": "bad1", "text": "brexit without a timestamp"}')
    lines.insert(250, '{"source": "myspace", "id": "bad2", "text": "brexit", "timestamp": "2019-03-02T00:00:00Z"}')
    lines.insert(400, "not json at all, brexit")

    (HERE / "posts.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    (HERE / "dictionary.txt").write_text("\n".join(vocab) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
