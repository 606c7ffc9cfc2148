"""Writes the bundled sample article corpus to data/articles/.

The articles are short, invented news items used by the demo feed, the
overlap evaluation and the tests. Re-running the script rewrites the files.
"""

import json
import pathlib

ARTICLES = [
    ("a01-gpo-commemoration",
     "Thousands gather at GPO for Easter Rising commemoration",
     "President leads ceremony on O'Connell Street",
     "Thousands of people gathered on O'Connell Street on Sunday as the State marked the anniversary of the Easter Rising. "
     "The ceremony outside the GPO began with a reading of the Proclamation of the Irish Republic. "
     "Taoiseach Enda Kenny laid a wreath and said the men and women of 1916 had shaped the Ireland we know today. "
     "Mr. Kenny was joined by members of the Defence Forces and relatives of the leaders of the Rising. "
     "Patrick Pearse read the Proclamation from the steps of the GPO in 1916, and the building remains a symbol of the Irish Republic. "
     "Organisers said the crowd on O'Connell Street was the largest in years. "
     "Kenny later visited Kilmainham, where the leaders were executed. "
     "The GPO will open a new visitor centre next month."),
    ("a02-budget-tax",
     "Budget to cut income tax for middle earners",
     "Noonan says USC reductions will continue",
     "Minister for Finance Michael Noonan has said next month's budget will cut income tax for middle earners. "
     "Speaking in Dublin, Mr. Noonan said the universal social charge would be reduced again and that the budget had room for about one billion euro in tax changes. "
     "The Department of Finance expects growth of four per cent this year. "
     "Noonan said the Government would also increase spending on housing and health. "
     "Fianna Fáil said it would support a budget that put housing first. "
     "Economists at the Central Bank have warned that the economy is at risk of overheating and that tax cuts should be modest. "
     "The budget will be presented to the Dáil on October 11th."),
    ("a03-rents-dublin",
     "Dublin rents hit new record as supply falls",
     "Average rent in the capital now above 1,500 euro",
     "Rents in Dublin have reached a new record, according to a report published on Tuesday. "
     "The average monthly rent in the capital rose by nine per cent over the year to more than 1,500 euro. "
     "The report found that the number of homes available to rent in Dublin had fallen to its lowest level in a decade. "
     "Rents in Cork and Galway also rose sharply. "
     "Housing charities said the rising cost of renting was pushing more families into homelessness. "
     "Focus Ireland said rent controls were needed in Dublin and Cork. "
     "The Minister for Housing Simon Coveney said new rent pressure zones would be introduced before Christmas. "
     "Coveney said the supply of new homes was the only long-term answer to rising rents."),
    ("a04-rugby-win",
     "Ireland beat England at Aviva Stadium in Six Nations",
     "Sexton kicks late penalty as Schmidt's side win",
     "Ireland beat England at the Aviva Stadium on Saturday to keep their Six Nations hopes alive. "
     "Johnny Sexton kicked a penalty with three minutes left to give Ireland a two-point win. "
     "Joe Schmidt said his players had shown great character. "
     "Conor Murray scored the only try of the first half after a long spell of pressure from Ireland. "
     "England led for much of the second half before Sexton levelled the match with a drop goal. "
     "Schmidt said Sexton was the best out-half in Europe. "
     "Ireland travel to Paris to play France in the final round of the Six Nations next week. "
     "Captain Rory Best said the squad would enjoy the win but focus quickly on France."),
    ("a05-web-summit",
     "Web Summit to leave Dublin for Lisbon",
     "Organisers cite hotel prices and transport",
     "The Web Summit is to leave Dublin for Lisbon after five years, its organisers have confirmed. "
     "The technology conference brought more than 30,000 visitors to Dublin last year. "
     "Chief executive Paddy Cosgrave said the event had outgrown the city and that Lisbon offered better transport and hotel capacity. "
     "The Government said it had worked hard to keep the Web Summit in Ireland. "
     "Hotels in Dublin had been criticised for raising prices during the conference. "
     "The move is a blow to the Dublin economy, which earned millions from the Web Summit each year. "
     "Lisbon will host the event for at least three years."),
    ("a06-luas-strike",
     "Luas strike to go ahead on Thursday",
     "Talks between drivers and Transdev end without agreement",
     "A Luas strike will go ahead on Thursday after talks between drivers and the operator Transdev ended without agreement. "
     "The Siptu union said its members had been left with no choice. "
     "The strike will close both Luas lines in Dublin for the whole day. "
     "Dublin Bus said it would run extra services but warned of delays across the city. "
     "The Luas drivers are seeking pay increases of up to 50 per cent over four years. "
     "Transdev said the claim was not affordable and urged Siptu to return to the Labour Relations Commission. "
     "It is the fourth Luas strike this year."),
    ("a07-shannon-flooding",
     "Flooding along Shannon forces families from homes",
     "Army deployed as river reaches highest level in decades",
     "Families living along the River Shannon have been forced from their homes after days of heavy rain. "
     "The Defence Forces were deployed in Athlone, where the Shannon reached its highest level in decades. "
     "Met Éireann has issued a further orange warning for rain in the west. "
     "Farmers in Roscommon and Longford said their land had been under water for weeks. "
     "The Minister for the Environment said flood defences on the Shannon would be reviewed. "
     "Residents in Athlone said sandbags had arrived too late. "
     "The ESB said it would continue to release water from the Shannon at Parteen Weir."),
    ("a08-apple-tax",
     "European Commission orders Apple to repay 13 billion euro",
     "Government to appeal Brussels ruling on Irish tax deal",
     "The European Commission has ruled that Ireland gave illegal tax benefits to Apple and must recover 13 billion euro. "
     "The ruling follows a three-year investigation by the European Commission into the tax arrangements of Apple in Cork. "
     "Minister for Finance Michael Noonan said he disagreed profoundly with the Commission. "
     "The Government will appeal the ruling to the European courts. "
     "Apple employs about 5,000 people in Cork. "
     "Noonan said the decision could damage Ireland's reputation with foreign investors. "
     "The European Commission said the tax deal allowed Apple to pay a rate of less than one per cent on profits in Europe."),
    ("a09-brexit-border",
     "Brexit raises fears over Northern Ireland border",
     "Kenny calls for no return to hard border",
     "The decision of the United Kingdom to leave the European Union has raised fears about the border between Ireland and Northern Ireland. "
     "Enda Kenny said there must be no return to a hard border on the island. "
     "Speaking in Brussels, Kenny said Ireland would work with the EU to protect the peace process. "
     "Northern Ireland voted to remain in the European Union. "
     "Businesses in Newry and Dundalk said any checks at the border would damage trade. "
     "The First Minister Arlene Foster said Northern Ireland would not be left worse off by Brexit. "
     "Brexit talks between London and Brussels are expected to begin next year."),
    ("a10-trolley-crisis",
     "Record number of patients on trolleys in hospitals",
     "Nurses warn of dangerous conditions in emergency departments",
     "A record number of patients were waiting on trolleys in hospitals on Monday, according to the nurses' union. "
     "The Irish Nurses and Midwives Organisation said 612 patients were on trolleys across the country. "
     "University Hospital Limerick had the highest number, with 50 patients waiting for a bed. "
     "The HSE said hospitals were under pressure from flu and an increase in older patients. "
     "Nurses said conditions in emergency departments were dangerous for patients and staff. "
     "The Minister for Health said extra beds would open in Limerick and Dublin. "
     "The HSE has asked patients to attend their GP before going to emergency departments."),
    ("a11-water-charges",
     "Thousands march in Dublin against water charges",
     "Protest organisers call for Irish Water to be abolished",
     "Thousands of people marched through Dublin on Saturday to protest against water charges. "
     "The march began at Heuston Station and ended on O'Connell Street. "
     "Organisers called for Irish Water to be abolished and for all water charges to be scrapped. "
     "Sinn Féin leader Gerry Adams said water charges were unfair. "
     "Irish Water said more than half of households had paid their most recent bill. "
     "Fianna Fáil has called for water charges to be suspended for five years. "
     "The Government is to establish a commission to examine the future of water charges."),
    ("a12-katie-taylor",
     "Katie Taylor wins first professional fight",
     "Bray boxer stops opponent in third round",
     "Katie Taylor won her first professional fight in London on Saturday night. "
     "Taylor stopped her opponent in the third round at Wembley Arena. "
     "The Olympic champion said she was delighted with the performance. "
     "Taylor, from Bray in Wicklow, turned professional after the Rio Olympics. "
     "Her promoter said Katie Taylor would fight again in Manchester next month. "
     "Taylor said she wanted to win a world title within a year. "
     "Hundreds of Irish fans travelled to London to support her."),
    ("a13-ryanair-profits",
     "Ryanair profits rise as fares fall",
     "Airline expects record passenger numbers",
     "Ryanair has reported a rise in profits despite lower fares. "
     "The airline said profit after tax rose by 7 per cent to 1.3 billion euro. "
     "Chief executive Michael O'Leary said Ryanair would carry a record number of passengers this year. "
     "O'Leary said average fares would fall again as Ryanair added new routes from Dublin and Cork. "
     "Shares in Ryanair rose in Dublin and London. "
     "O'Leary warned that Brexit could disrupt flights between the UK and Europe. "
     "Ryanair has more than 400 aircraft."),
    ("a14-dublin-gaa",
     "Dublin win All-Ireland football final after replay",
     "Gavin praises players as Dublin retain Sam Maguire",
     "Dublin won the All-Ireland football final after beating Mayo by one point in a replay at Croke Park. "
     "Dublin manager Jim Gavin praised his players for their character. "
     "Mayo led at half-time but Dublin scored four points in the final ten minutes. "
     "Stephen Cluxton kicked the winning point with a free. "
     "It is the second year in a row that Dublin have won the All-Ireland. "
     "Mayo manager Stephen Rochford said his players had given everything. "
     "More than 82,000 people attended the final at Croke Park."),
    ("a15-garda-reform",
     "Garda Commissioner announces new policing plan",
     "O'Sullivan says more gardaí will be on the streets",
     "Garda Commissioner Noirin O'Sullivan has announced a new policing plan for the next five years. "
     "O'Sullivan said more gardaí would be on the streets and that the force would invest in new technology. "
     "The plan will create a new cyber crime unit. "
     "The Garda Síochána will recruit 800 new members this year. "
     "The Garda Representative Association said its members needed better pay before any reform. "
     "O'Sullivan said the plan would make the Garda Síochána more visible in communities. "
     "The Minister for Justice Frances Fitzgerald welcomed the plan."),
    ("a16-mortgage-rules",
     "Central Bank to keep mortgage lending rules",
     "First-time buyers will still need 10 per cent deposit",
     "The Central Bank has said it will keep its mortgage lending rules in place. "
     "Under the rules, first-time buyers must have a deposit of 10 per cent. "
     "Governor Philip Lane said the mortgage rules had made the banking system safer. "
     "Estate agents said the deposit rules were making it hard for young people to buy a home. "
     "The Central Bank will review the mortgage rules every year. "
     "Lane said house prices in Dublin had risen by 8 per cent in the past year. "
     "The Government has introduced a help-to-buy scheme for first-time buyers."),
    ("a17-irish-open",
     "McIlroy wins Irish Open at the K Club",
     "World number three finishes three shots clear",
     "Rory McIlroy won the Irish Open at the K Club in Kildare on Sunday. "
     "McIlroy finished three shots clear of the field after a final round of 69. "
     "He said winning the Irish Open was a dream come true. "
     "Shane Lowry finished in the top ten. "
     "McIlroy's foundation hosted the tournament, and the prize fund went to charity. "
     "Thousands of fans followed McIlroy around the course. "
     "The Irish Open will be held in Portstewart next year."),
    ("a18-government-talks",
     "Fine Gael and Fianna Fáil resume government talks",
     "Kenny and Martin meet to discuss minority government",
     "Fine Gael and Fianna Fáil have resumed talks on the formation of a new government. "
     "Enda Kenny and Micheál Martin met in Government Buildings on Wednesday. "
     "Fianna Fáil is considering whether to support a minority Fine Gael government from the opposition benches. "
     "Martin said water charges remained a key issue for Fianna Fáil. "
     "Independent TDs also met Fine Gael negotiators. "
     "Kenny said he was confident that a government would be formed. "
     "The Dáil will vote again on the election of a Taoiseach next week."),
    ("a19-homelessness",
     "Number of homeless children passes 2,000",
     "Focus Ireland calls for emergency action on housing",
     "The number of children living in emergency accommodation has passed 2,000 for the first time. "
     "Figures from the Department of Housing show that more than 1,000 families are homeless. "
     "Most of the homeless families are in Dublin, where many live in hotel rooms. "
     "Focus Ireland said the figures were shocking and called for emergency action. "
     "The charity said rising rents were the main cause of family homelessness. "
     "The Government said it would provide 1,500 rapid-build homes by the end of next year. "
     "The Peter McVerry Trust said more homes were needed in Dublin."),
    ("a20-cork-airport",
     "Cork Airport to get new transatlantic route",
     "Norwegian to fly from Cork to Boston",
     "Cork Airport is to get its first transatlantic route in years after Norwegian announced flights to Boston. "
     "The airline will fly from Cork to Boston three times a week from next summer. "
     "The managing director of Cork Airport said the route would boost tourism in the south of Ireland. "
     "Business groups in Cork welcomed the announcement. "
     "The route was delayed for months while Norwegian waited for approval in the United States. "
     "Passenger numbers at Cork Airport rose by 7 per cent last year. "
     "Norwegian also flies from Dublin and Shannon."),
]


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "articles"
    out.mkdir(parents=True, exist_ok=True)
    for ident, headline, subheadline, body in ARTICLES:
        doc = {"id": ident, "headline": headline, "subheadline": subheadline,
               "body": body, "source": "Sample desk"}
        (out / f"{ident}.json").write_text(json.dumps(doc, ensure_ascii=False, indent=2) + "\n",
                                           encoding="utf-8")


if __name__ == "__main__":
    main()
