"""School roster for the bundled benchmark dataset.

Each entry: (id, name, domain, conference).  Conference membership in one of
the five marquee football conferences sets the power_five flag downstream.
"""

POWER_FIVE_CONFERENCES = ("SEC", "ACC", "Big Ten", "Pac-12", "Big 12")

# Anchors referenced by name in the score tables.
CORE = [
    ("harvard", "Harvard University", "harvard.edu", "Ivy League"),
    ("stanford", "Stanford University", "stanford.edu", "Pac-12"),
    ("uc-berkeley", "University of California--Berkeley", "berkeley.edu", "Pac-12"),
    ("princeton", "Princeton University", "princeton.edu", "Ivy League"),
    ("columbia", "Columbia University", "columbia.edu", "Ivy League"),
    ("ucla", "University of California--Los Angeles", "ucla.edu", "Pac-12"),
    ("yale", "Yale University", "yale.edu", "Ivy League"),
    ("university-of-pennsylvania", "University of Pennsylvania", "upenn.edu", "Ivy League"),
    ("university-of-washington", "University of Washington", "washington.edu", "Pac-12"),
    ("university-of-michigan", "University of Michigan", "umich.edu", "Big Ten"),
    ("cornell", "Cornell University", "cornell.edu", "Ivy League"),
    ("duke", "Duke University", "duke.edu", "ACC"),
    ("university-of-minnesota", "University of Minnesota", "umn.edu", "Big Ten"),
    ("ohio-state", "Ohio State University", "osu.edu", "Big Ten"),
    ("penn-state", "Pennsylvania State University", "psu.edu", "Big Ten"),
    ("arizona-state", "Arizona State University", "asu.edu", "Pac-12"),
    ("university-of-texas", "University of Texas", "utexas.edu", "Big 12"),
    ("wisconsin", "University of Wisconsin--Madison", "wisc.edu", "Big Ten"),
    ("university-of-florida", "University of Florida", "ufl.edu", "SEC"),
    ("michigan-state", "Michigan State University", "msu.edu", "Big Ten"),
    ("indiana-university", "Indiana University", "indiana.edu", "Big Ten"),
    ("university-of-illinois", "University of Illinois", "illinois.edu", "Big Ten"),
    ("purdue", "Purdue University", "purdue.edu", "Big Ten"),
    ("university-of-southern-california", "University of Southern California", "usc.edu", "Pac-12"),
    ("university-of-georgia", "University of Georgia", "uga.edu", "SEC"),
    # homepage-fallback schools
    ("university-of-louisville", "University of Louisville", "louisville.edu", "ACC"),
    ("university-of-south-carolina", "University of South Carolina", "sc.edu", "SEC"),
    ("university-of-missouri", "University of Missouri", "missouri.edu", "SEC"),
    ("unc-greensboro", "University of North Carolina-Greensboro", "uncg.edu", "Southern"),
    ("ball-state", "Ball State University", "bsu.edu", "MAC"),
    ("university-of-evansville", "University of Evansville", "evansville.edu", "MVC"),
    ("fordham", "Fordham University", "fordham.edu", "Atlantic 10"),
    ("marist", "Marist College", "marist.edu", "MAAC"),
    ("portland-state", "Portland State University", "pdx.edu", "Big Sky"),
    ("east-carolina", "East Carolina University", "ecu.edu", "American"),
    # narrative anchors
    ("georgia-tech", "Georgia Institute of Technology", "gatech.edu", "ACC"),
    ("wake-forest", "Wake Forest University", "wfu.edu", "ACC"),
    ("old-dominion", "Old Dominion University", "odu.edu", "Conference USA"),
    ("university-of-san-diego", "University of San Diego", "sandiego.edu", "WCC"),
    ("tcu", "Texas Christian University", "tcu.edu", "Big 12"),
    ("mississippi-state", "Mississippi State University", "msstate.edu", "SEC"),
    ("citadel", "The Citadel", "citadel.edu", "Southern"),
]

# Remaining marquee-conference members.
POWER_FIVE_EXTRA = [
    ("alabama", "University of Alabama", "ua.edu", "SEC"),
    ("arkansas", "University of Arkansas", "uark.edu", "SEC"),
    ("auburn", "Auburn University", "auburn.edu", "SEC"),
    ("kentucky", "University of Kentucky", "uky.edu", "SEC"),
    ("lsu", "Louisiana State University", "lsu.edu", "SEC"),
    ("ole-miss", "University of Mississippi", "olemiss.edu", "SEC"),
    ("tennessee", "University of Tennessee", "utk.edu", "SEC"),
    ("texas-am", "Texas A&M University", "tamu.edu", "SEC"),
    ("vanderbilt", "Vanderbilt University", "vanderbilt.edu", "SEC"),
    ("boston-college", "Boston College", "bc.edu", "ACC"),
    ("clemson", "Clemson University", "clemson.edu", "ACC"),
    ("florida-state", "Florida State University", "fsu.edu", "ACC"),
    ("miami-fl", "University of Miami", "miami.edu", "ACC"),
    ("north-carolina", "University of North Carolina", "unc.edu", "ACC"),
    ("nc-state", "North Carolina State University", "ncsu.edu", "ACC"),
    ("notre-dame", "University of Notre Dame", "nd.edu", "ACC"),
    ("pittsburgh", "University of Pittsburgh", "pitt.edu", "ACC"),
    ("syracuse", "Syracuse University", "syr.edu", "ACC"),
    ("virginia", "University of Virginia", "virginia.edu", "ACC"),
    ("virginia-tech", "Virginia Tech", "vt.edu", "ACC"),
    ("iowa", "University of Iowa", "uiowa.edu", "Big Ten"),
    ("maryland", "University of Maryland", "umd.edu", "Big Ten"),
    ("nebraska", "University of Nebraska", "unl.edu", "Big Ten"),
    ("northwestern", "Northwestern University", "northwestern.edu", "Big Ten"),
    ("rutgers", "Rutgers University", "rutgers.edu", "Big Ten"),
    ("arizona", "University of Arizona", "arizona.edu", "Pac-12"),
    ("colorado", "University of Colorado", "colorado.edu", "Pac-12"),
    ("oregon", "University of Oregon", "uoregon.edu", "Pac-12"),
    ("oregon-state", "Oregon State University", "oregonstate.edu", "Pac-12"),
    ("utah", "University of Utah", "utah.edu", "Pac-12"),
    ("washington-state", "Washington State University", "wsu.edu", "Pac-12"),
    ("baylor", "Baylor University", "baylor.edu", "Big 12"),
    ("iowa-state", "Iowa State University", "iastate.edu", "Big 12"),
    ("kansas", "University of Kansas", "ku.edu", "Big 12"),
    ("kansas-state", "Kansas State University", "k-state.edu", "Big 12"),
    ("oklahoma", "University of Oklahoma", "ou.edu", "Big 12"),
    ("oklahoma-state", "Oklahoma State University", "okstate.edu", "Big 12"),
    ("texas-tech", "Texas Tech University", "ttu.edu", "Big 12"),
    ("west-virginia", "West Virginia University", "wvu.edu", "Big 12"),
]

OTHERS = [
    ("air-force", "United States Air Force Academy", "usafa.edu", "Mountain West"),
    ("akron", "University of Akron", "uakron.edu", "MAC"),
    ("american", "American University", "american.edu", "Patriot"),
    ("appalachian-state", "Appalachian State University", "appstate.edu", "Sun Belt"),
    ("arkansas-state", "Arkansas State University", "astate.edu", "Sun Belt"),
    ("army", "United States Military Academy", "westpoint.edu", "Patriot"),
    ("binghamton", "Binghamton University", "binghamton.edu", "America East"),
    ("boise-state", "Boise State University", "boisestate.edu", "Mountain West"),
    ("boston-university", "Boston University", "bu.edu", "Patriot"),
    ("bowling-green", "Bowling Green State University", "bgsu.edu", "MAC"),
    ("bradley", "Bradley University", "bradley.edu", "MVC"),
    ("brown", "Brown University", "brown.edu", "Ivy League"),
    ("bucknell", "Bucknell University", "bucknell.edu", "Patriot"),
    ("buffalo", "University at Buffalo", "buffalo.edu", "MAC"),
    ("butler", "Butler University", "butler.edu", "Big East"),
    ("byu", "Brigham Young University", "byu.edu", "WCC"),
    ("cal-poly", "California Polytechnic State University", "calpoly.edu", "Big West"),
    ("cal-state-fullerton", "California State University-Fullerton", "fullerton.edu", "Big West"),
    ("campbell", "Campbell University", "campbell.edu", "Big South"),
    ("canisius", "Canisius College", "canisius.edu", "MAAC"),
    ("central-connecticut", "Central Connecticut State University", "ccsu.edu", "Northeast"),
    ("central-michigan", "Central Michigan University", "cmich.edu", "MAC"),
    ("charleston", "College of Charleston", "cofc.edu", "CAA"),
    ("charlotte", "University of North Carolina at Charlotte", "charlotte.edu", "Conference USA"),
    ("chattanooga", "University of Tennessee at Chattanooga", "utc.edu", "Southern"),
    ("cincinnati", "University of Cincinnati", "uc.edu", "American"),
    ("cleveland-state", "Cleveland State University", "csuohio.edu", "Horizon"),
    ("coastal-carolina", "Coastal Carolina University", "coastal.edu", "Sun Belt"),
    ("colgate", "Colgate University", "colgate.edu", "Patriot"),
    ("colorado-state", "Colorado State University", "colostate.edu", "Mountain West"),
    ("creighton", "Creighton University", "creighton.edu", "Big East"),
    ("dartmouth", "Dartmouth College", "dartmouth.edu", "Ivy League"),
    ("davidson", "Davidson College", "davidson.edu", "Atlantic 10"),
    ("dayton", "University of Dayton", "udayton.edu", "Atlantic 10"),
    ("delaware", "University of Delaware", "udel.edu", "CAA"),
    ("denver", "University of Denver", "du.edu", "Summit"),
    ("depaul", "DePaul University", "depaul.edu", "Big East"),
    ("drake", "Drake University", "drake.edu", "MVC"),
    ("drexel", "Drexel University", "drexel.edu", "CAA"),
    ("duquesne", "Duquesne University", "duq.edu", "Atlantic 10"),
    ("east-tennessee-state", "East Tennessee State University", "etsu.edu", "Southern"),
    ("eastern-michigan", "Eastern Michigan University", "emich.edu", "MAC"),
    ("eastern-washington", "Eastern Washington University", "ewu.edu", "Big Sky"),
    ("elon", "Elon University", "elon.edu", "CAA"),
    ("fairfield", "Fairfield University", "fairfield.edu", "MAAC"),
    ("fiu", "Florida International University", "fiu.edu", "Conference USA"),
    ("florida-atlantic", "Florida Atlantic University", "fau.edu", "Conference USA"),
    ("florida-gulf-coast", "Florida Gulf Coast University", "fgcu.edu", "Atlantic Sun"),
    ("fresno-state", "Fresno State University", "fresnostate.edu", "Mountain West"),
    ("furman", "Furman University", "furman.edu", "Southern"),
    ("george-mason", "George Mason University", "gmu.edu", "Atlantic 10"),
    ("george-washington", "George Washington University", "gwu.edu", "Atlantic 10"),
    ("georgetown", "Georgetown University", "georgetown.edu", "Big East"),
    ("georgia-southern", "Georgia Southern University", "georgiasouthern.edu", "Sun Belt"),
    ("georgia-state", "Georgia State University", "gsu.edu", "Sun Belt"),
    ("gonzaga", "Gonzaga University", "gonzaga.edu", "WCC"),
    ("grand-canyon", "Grand Canyon University", "gcu.edu", "WAC"),
    ("green-bay", "University of Wisconsin-Green Bay", "uwgb.edu", "Horizon"),
    ("hawaii", "University of Hawaii", "hawaii.edu", "Mountain West"),
    ("hofstra", "Hofstra University", "hofstra.edu", "CAA"),
    ("holy-cross", "College of the Holy Cross", "holycross.edu", "Patriot"),
    ("houston", "University of Houston", "uh.edu", "American"),
    ("idaho", "University of Idaho", "uidaho.edu", "Big Sky"),
    ("idaho-state", "Idaho State University", "isu.edu", "Big Sky"),
    ("illinois-state", "Illinois State University", "illinoisstate.edu", "MVC"),
    ("indiana-state", "Indiana State University", "indstate.edu", "MVC"),
    ("iona", "Iona College", "iona.edu", "MAAC"),
    ("jacksonville", "Jacksonville University", "ju.edu", "Atlantic Sun"),
    ("jacksonville-state", "Jacksonville State University", "jsu.edu", "Ohio Valley"),
    ("james-madison", "James Madison University", "jmu.edu", "CAA"),
    ("kent-state", "Kent State University", "kent.edu", "MAC"),
    ("la-salle", "La Salle University", "lasalle.edu", "Atlantic 10"),
    ("lafayette", "Lafayette College", "lafayette.edu", "Patriot"),
    ("lamar", "Lamar University", "lamar.edu", "Southland"),
    ("lehigh", "Lehigh University", "lehigh.edu", "Patriot"),
    ("liberty", "Liberty University", "liberty.edu", "Big South"),
    ("lipscomb", "Lipscomb University", "lipscomb.edu", "Atlantic Sun"),
    ("long-beach-state", "California State University-Long Beach", "csulb.edu", "Big West"),
    ("louisiana-tech", "Louisiana Tech University", "latech.edu", "Conference USA"),
    ("loyola-chicago", "Loyola University Chicago", "luc.edu", "MVC"),
    ("loyola-marymount", "Loyola Marymount University", "lmu.edu", "WCC"),
    ("loyola-maryland", "Loyola University Maryland", "loyola.edu", "Patriot"),
    ("maine", "University of Maine", "maine.edu", "America East"),
    ("manhattan", "Manhattan College", "manhattan.edu", "MAAC"),
    ("marquette", "Marquette University", "marquette.edu", "Big East"),
    ("marshall", "Marshall University", "marshall.edu", "Conference USA"),
    ("massachusetts", "University of Massachusetts", "umass.edu", "Atlantic 10"),
    ("memphis", "University of Memphis", "memphis.edu", "American"),
    ("mercer", "Mercer University", "mercer.edu", "Southern"),
    ("miami-oh", "Miami University", "miamioh.edu", "MAC"),
    ("middle-tennessee", "Middle Tennessee State University", "mtsu.edu", "Conference USA"),
    ("milwaukee", "University of Wisconsin-Milwaukee", "uwm.edu", "Horizon"),
    ("missouri-state", "Missouri State University", "missouristate.edu", "MVC"),
    ("monmouth", "Monmouth University", "monmouth.edu", "MAAC"),
    ("montana", "University of Montana", "umt.edu", "Big Sky"),
    ("montana-state", "Montana State University", "montana.edu", "Big Sky"),
    ("murray-state", "Murray State University", "murraystate.edu", "Ohio Valley"),
    ("navy", "United States Naval Academy", "usna.edu", "American"),
    ("nevada", "University of Nevada", "unr.edu", "Mountain West"),
    ("new-hampshire", "University of New Hampshire", "unh.edu", "America East"),
    ("new-mexico", "University of New Mexico", "unm.edu", "Mountain West"),
    ("new-mexico-state", "New Mexico State University", "nmsu.edu", "WAC"),
    ("niagara", "Niagara University", "niagara.edu", "MAAC"),
    ("north-dakota", "University of North Dakota", "und.edu", "Big Sky"),
    ("north-dakota-state", "North Dakota State University", "ndsu.edu", "Summit"),
    ("north-florida", "University of North Florida", "unf.edu", "Atlantic Sun"),
    ("north-texas", "University of North Texas", "unt.edu", "Conference USA"),
    ("northeastern", "Northeastern University", "northeastern.edu", "CAA"),
    ("northern-arizona", "Northern Arizona University", "nau.edu", "Big Sky"),
    ("northern-illinois", "Northern Illinois University", "niu.edu", "MAC"),
    ("northern-iowa", "University of Northern Iowa", "uni.edu", "MVC"),
    ("oakland", "Oakland University", "oakland.edu", "Horizon"),
    ("ohio-university", "Ohio University", "ohio.edu", "MAC"),
    ("oral-roberts", "Oral Roberts University", "oru.edu", "Summit"),
    ("pacific", "University of the Pacific", "pacific.edu", "WCC"),
    ("pepperdine", "Pepperdine University", "pepperdine.edu", "WCC"),
    ("portland", "University of Portland", "up.edu", "WCC"),
    ("providence", "Providence College", "providence.edu", "Big East"),
    ("quinnipiac", "Quinnipiac University", "qu.edu", "MAAC"),
    ("radford", "Radford University", "radford.edu", "Big South"),
    ("rhode-island", "University of Rhode Island", "uri.edu", "Atlantic 10"),
    ("rice", "Rice University", "rice.edu", "Conference USA"),
    ("richmond", "University of Richmond", "richmond.edu", "Atlantic 10"),
    ("rider", "Rider University", "rider.edu", "MAAC"),
    ("saint-josephs", "Saint Joseph's University", "sju.edu", "Atlantic 10"),
    ("saint-louis", "Saint Louis University", "slu.edu", "Atlantic 10"),
    ("saint-marys-ca", "Saint Mary's College of California", "stmarys-ca.edu", "WCC"),
    ("sam-houston-state", "Sam Houston State University", "shsu.edu", "Southland"),
    ("samford", "Samford University", "samford.edu", "Southern"),
    ("san-diego-state", "San Diego State University", "sdsu.edu", "Mountain West"),
    ("san-francisco", "University of San Francisco", "usfca.edu", "WCC"),
    ("san-jose-state", "San Jose State University", "sjsu.edu", "Mountain West"),
    ("santa-clara", "Santa Clara University", "scu.edu", "WCC"),
    ("seton-hall", "Seton Hall University", "shu.edu", "Big East"),
    ("siena", "Siena College", "siena.edu", "MAAC"),
    ("smu", "Southern Methodist University", "smu.edu", "American"),
    ("south-alabama", "University of South Alabama", "southalabama.edu", "Sun Belt"),
    ("south-dakota", "University of South Dakota", "usd.edu", "Summit"),
    ("south-dakota-state", "South Dakota State University", "sdstate.edu", "Summit"),
    ("south-florida", "University of South Florida", "usf.edu", "American"),
    ("southern-illinois", "Southern Illinois University", "siu.edu", "MVC"),
    ("southern-miss", "University of Southern Mississippi", "usm.edu", "Conference USA"),
    ("st-bonaventure", "St. Bonaventure University", "sbu.edu", "Atlantic 10"),
    ("st-johns", "St. John's University", "stjohns.edu", "Big East"),
    ("stephen-f-austin", "Stephen F. Austin State University", "sfasu.edu", "Southland"),
    ("stony-brook", "Stony Brook University", "stonybrook.edu", "America East"),
    ("temple", "Temple University", "temple.edu", "American"),
    ("texas-state", "Texas State University", "txstate.edu", "Sun Belt"),
    ("toledo", "University of Toledo", "utoledo.edu", "MAC"),
    ("towson", "Towson University", "towson.edu", "CAA"),
    ("troy", "Troy University", "troy.edu", "Sun Belt"),
    ("tulane", "Tulane University", "tulane.edu", "American"),
    ("tulsa", "University of Tulsa", "utulsa.edu", "American"),
    ("ucf", "University of Central Florida", "ucf.edu", "American"),
    ("uc-davis", "University of California-Davis", "ucdavis.edu", "Big West"),
    ("uc-irvine", "University of California-Irvine", "uci.edu", "Big West"),
    ("uc-riverside", "University of California-Riverside", "ucr.edu", "Big West"),
    ("uc-santa-barbara", "University of California-Santa Barbara", "ucsb.edu", "Big West"),
    ("uconn", "University of Connecticut", "uconn.edu", "American"),
    ("ul-lafayette", "University of Louisiana at Lafayette", "louisiana.edu", "Sun Belt"),
    ("ul-monroe", "University of Louisiana at Monroe", "ulm.edu", "Sun Belt"),
    ("umbc", "University of Maryland-Baltimore County", "umbc.edu", "America East"),
    ("unc-asheville", "University of North Carolina at Asheville", "unca.edu", "Big South"),
    ("unc-wilmington", "University of North Carolina at Wilmington", "uncw.edu", "CAA"),
    ("unlv", "University of Nevada-Las Vegas", "unlv.edu", "Mountain West"),
    ("utah-state", "Utah State University", "usu.edu", "Mountain West"),
    ("utep", "University of Texas at El Paso", "utep.edu", "Conference USA"),
    ("utsa", "University of Texas at San Antonio", "utsa.edu", "Conference USA"),
    ("vcu", "Virginia Commonwealth University", "vcu.edu", "Atlantic 10"),
    ("vermont", "University of Vermont", "uvm.edu", "America East"),
    ("villanova", "Villanova University", "villanova.edu", "Big East"),
    ("vmi", "Virginia Military Institute", "vmi.edu", "Southern"),
    ("weber-state", "Weber State University", "weber.edu", "Big Sky"),
    ("western-carolina", "Western Carolina University", "wcu.edu", "Southern"),
    ("western-kentucky", "Western Kentucky University", "wku.edu", "Conference USA"),
    ("western-michigan", "Western Michigan University", "wmich.edu", "MAC"),
    ("wichita-state", "Wichita State University", "wichita.edu", "MVC"),
    ("william-mary", "College of William & Mary", "wm.edu", "CAA"),
    ("wofford", "Wofford College", "wofford.edu", "Southern"),
    ("wright-state", "Wright State University", "wright.edu", "Horizon"),
    ("wyoming", "University of Wyoming", "uwyo.edu", "Mountain West"),
    ("xavier", "Xavier University", "xavier.edu", "Big East"),
    ("youngstown-state", "Youngstown State University", "ysu.edu", "Horizon"),
]


def full_roster():
    roster = CORE + POWER_FIVE_EXTRA + OTHERS
    ids = [r[0] for r in roster]
    assert len(ids) == len(set(ids)), "duplicate ids in roster"
    return roster
