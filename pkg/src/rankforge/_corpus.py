"""Appendix corpus of the 175-node business process network, verbatim.

Generated once from the published node list, link list and top-30
tables; ``data/`` holds the same text as loose files.
"""

NODES_TEXT = """\
1	Principals,
2	Consultants,
3	Value,
4	Products,
5	Projects,
6	Customers,
7	Contacts,
8	Heads Of Branch,
9	Total Principals,
10	Maximum Principal Proposal Effort,
11	Maximum Principal Hiring Effort,
12	Average Principal Work Effort,
13	Maximum Principal Work Effort,
14	Maximum Project Time Share,
15	Maximum Contact Maintenance Effort,
16	Maximum Product Effort,
17	Contact Maintenance Effort,
18	Maximum Contact Maintenace Time Share,
19	Maximum Principal Project Effort,
20      Contacting Effort,
21	Qualified Contacts,
22	Required Contact Maintenance Effort,
23	Qualified Contact Maintenance Effort,
24	Qualified Contact Lifetime,
25	Maximum Qualified Contacts,
26	Minimum Qualification Duration,
27	Qualification Fraction,
28	Contact Qualification Rate,
29	Qualified Contact Loss,
30	Maximum Qualification Rate,
31	Contact Identification,
32	Identified Contacts,
33	Identified Contact Loss,
34	New Customer Contact Potential,
35	Identificaton Duration,
36	Identified Contact Lifetime,
37	Identification Fraction,
38  Delivery Proposal Effort,
39  New Delivery Proposal Effort,
40  Delivery Proposal Writing Effort,
41  Principal Delivery Proposal Effort,
42  Delivery Proposal Effort Share,
43  Delivery Proposal Closing Rate,
44  Delivery Proposal Writing Rate,
45  Minimum Duration Per Delivery Proposal,
46  Delivery Project Effort, 
47  Effort Per Delivery Proposal,
48  Required Delivery Proposal Effort,
49  Delivery Lead Success Rate,
50  Delivery Proposal Effort Fraction,
51  First Time Delivery Lead Success,
52  Repeat Delivery Lead Success,
53   Repeat Delivery Lead Fraction,
54   Repeat Delivery Lead Generation,
55   Repeat Delivery Leads,
56   Repeat Delivery Lead Success,
57   Repeat Delivery Proposals,
58   Repeat Delivery Proposal Success,
59   Repeat Delivery Lead Loss,
60   Repeat Delivery Proposal Loss,
61   Delivery Project Effort,
62   Customer Delivery Lead Generation Duration,
63   Delivery Lead Closing Duration,
64   Delivery Proposal Closing Rate,
65   Lead Generation Pressure,
66   Effect Of Delivery Project Per Principal,
67   Repeat Delivery Lead Success Fraction,
68   Repeat Delivery Proposal Success Fraction,
69   First Time Delivery Lead Generation Duration,
70   First Time Delivery Leads,
71   First Time Delivery Proposals,
72   Delivery Projects Won,
73   First Time Delivery Lead Generation,
74   First Time Delivery Lead Success,
75   First Time Delivery Proposal Success,
76   First Time Delivery Lead Fraction,
77   First Time Delivery LeadLoss,
78   First Time Delivery Proposal Loss,
79   Delivery Proposal Closing Rate,
80   Delivery Lead Closing Duration,
81   First Time Delivery Proposal Success Fraction,
82   First Time Delivery Lead Success Fraction,
83   Average Time To Delivery Project Start,
84   Delivery Project Start,
85   Active Delivery Projects,
86   Delivery Project Effort,
87   Delivery Project Completion,
88   Delivery Project Completion Rate,
89  Principal Proposal Effort,
90  Active Delivery Projects,
91  Delivery Project Per Principal,
92  Total Consulting Staff,
93  Delivery Projects Staff Needed,
94  Consultants Needed,
95  Active Consulting Projects,
96  Active Solution Projects,
97  Consulting Projects Staff Needed,
98   Project Work Rate Needed,
99   Consulting Project Leverage,
100  Solution Projects Staff Needed,
101  Maximum Consultant Work Effort,
102  Solution Project Leverage,
103  Utilization Percentage,
104  Total Project Staff Needed,
105  Solution Projects Staff Needed,
106  Solution Project Delivery Rate,
107  Delivery Project Completion Rate,
108  Average Work Rate,
109  Actual Project Delivery Rate,
110  Principal Project Effort,
111  Delivery Projects Staff Needed,
112  Consulting Project Delivery Rate,
113  Maximum Work Rate,
114 Hiring Effort Per Hire,
115 Hiring Effort,
116 Consultant Target,
117 Annual Consultant Growth Target Percentage,
118 Fluctuation Rate,
119 Hire Rate,
120 Fluctuation,
121 Maximum Leverage,
122 Leverage
123 Average Hiring Duration,   
124 Total Customers,
125 New Customers,
126 Mature Customers,
127 Customer Acquisition,
128 Customer Maturing,
129 Customer Attrition,
130 Customer Project Conversion,
131 Maturing Duration,
132 New Customer Loss,
133 Mature Customer Loss,
134 Customer Lifetime,
135 Customer ErosionTime,
136 Required New Customer Maintenance Effort,
137 Required Mature Customer Maintenance Effort,
138 New Customer Contact Maintenance Effort Share,
139 New Customer Maintenance Effort Per Customer,
140 New Customer Contact Maintenance Effort,
141 Mature Customer Contact Maintenance Effort,
142 Mature Customer Maintenance Effort Per Customer,
143 Customer Maintenance Effort,
144 Marketable Product,
145 Product Marketing Effort,
146 Product Marketing Effort Percentage,
147 Required Product Marketing Effort,
148 Product Marketing Rate,
149 Marketing Reject,
150 Development Reject Duration,
151 Development Reject Fraction,
152 Standardised Product,
153 Product Standardisation Effort,
154 Product Standardisation Effort Percentage,
155 Required Product Standardisation Effort,
156 Product Standardization Rate,
157 Innovation Product,
158 Poduct Innovation Effort,
159 Product Innovation Effort Percentage,
160 Required Product Innovation Effort,
161 Product Innovation Rate,
162 Innovation Reject,
163 Innovation Reject Fraction,
164 Innovation Reject Duration,
165 Product Lifetime,
166 Product Obsolescence Rate,
167 Time To Standardisation,
168 Leverage Adjustment Time,
169 Leverage Loss,
170 Leverage Win,
171 Project Leverage,
172 Time To Standardization Excellence,
173 Maximum Project Leverage,
174 Project Leverage Percentage,
175 Minimum Project Leverage.
"""

LINKS_TEXT = """\
1.   2 3 4 5 6 7 9 91 92 94 119 122,
2.   1 3 5 92 101 119 120 122,
3.   5,
4.   5 3,
5.   1 2 3 6,
6.   5 7 1,
7.   5 1,
8.   9,
9.   13,
10.  11,
11. 19 15 16 119,
12.  13,
13.  10 103,
14.  19,
15.  140 141,	
16.  145 153 158, 	
17.  16,
18.  15,
19.  110 113,	
20.	,
21.  22 73,
22.  23 29,
23.  29,
24.  29,
25.  28,
26.  28,
27.  28,
28.  21,
29.  32,
30.  28,
31.  32,
32.  33,
33.    ,
34.  31,
35.  31,
36.  33,
37.  31,
38.  40,
39.  38,
40.    ,
41.  40 45,
42.  41,
43.    ,
44.  43,
45.  43,
46.  47,
47.  48,
48.  39,
49.  48,
50.  47,
51.  49,
52.  49,
53.  54,
54.  55,
55.  56 59,
56.  57,
57.  58 60,
58.  72,
59.    ,
60.    ,
61.  62,
62.  54,
63.  56 59,
64.  58 60, 
65.  54 73,
66.  54 73,
67.  56 59,
68.  58 60,
69.  73,
70.  74 77,
71.  75 78,
72.  84,
73.  70,
74.  71,
75.  72 127,
76.  73,
77.    ,
78.    ,
79.  75 78,
80.  74 77,
81.  75 78,
82.  74 77,
83.  84,
84.  85,
85.  87,
86.  87,
87.    ,
88.  87,
89. 41,
90.  91 93,
91.    ,
92.    ,
93.  98 104 112,
94.    ,
95.  97,
96.  100,
97.  104 98,
98.  109,
99.  97,
100. 98 104,
101. 103 113,
102. 105,
103.   ,
104. 106 107 112,
105. 98 104 106 107, 
106. 109,
107.     ,
108. 98 101,
109. 103 110 112,
110.     ,
111.  107,
112.     ,
113. 109 110,
114. 115 119,
115.        ,
116. 119,
117. 116,
118. 120,
119. 2,
120.  ,
121. 119,
122.    ,
123. 119,
124.    ,
125. 31 124, 
126. 54 124 129 133 137, 
127. 125,
128. 126,
129.    ,
130. 127,
131. 128,
132.    ,
133.    ,
134. 129,
135. 132 133,
136. 132 138 140,
137. 133 138 141, 
138. 140 141,
139. 136,
140. 132 143,
141. 133 143,
142. 137,
143.    ,
144. 149 156,
145. 148,
146. 145,
147. 148,
148. 144,
149.    ,
150. 149,
151. 149 156,
152. 166,
153. 156,
154. 153,
155. 156,
156. 152,
157. 148 162,
158. 161,
159. 158,
160. 161,
161. 157,
162.    ,
163. 148 162, 
164. 162,
165. 166,
166.    ,
167. 153 169 170,
168. 169 170,
169.       ,
170. 171,
171. 62 93 169 170 174, 
172. 169 170,
173. 170 174,
174.        ,
175. 169 174,
"""

PAGERANK_TOP30_LABELS = (
    'Identified Contact Loss',
    'Identified Contacts',
    'Projects',
    'Consultants',
    'Delivery Project Completion',
    'Actual Project Delivery Rate',
    'Product Obsolescence Rate',
    'Product Standardization Rate',
    'Standardised Product',
    'Delivery Proposal Writing Effort',
    'Delivery Project Start',
    'Active Delivery Projects',
    'Hire Rate',
    'Marketable Product',
    'Product Marketing Rate',
    'Utilization Percentage',
    'Delivery Proposal Effort',
    'Principals',
    'Delivery Projects Won',
    'New Delivery Proposal Effort',
    'First Time Delivery Leads',
    'Principal Project Effort',
    'Required Delivery Proposal Effort',
    'First Time Delivery Lead Generation',
    'Repeat Delivery Leads',
    'Repeat Delivery Lead Generation',
    'Contact Identification',
    'Qualified Contact Loss',
    'Consulting Project Delivery Rate',
    'Marketing Reject',
)

CHEIRANK_TOP30_LABELS = (
    'Principals',
    'Projects',
    'Consultants',
    'Customers',
    'Contacts',
    'Maximum Principal Work Effort',
    'Maximum Principal Proposal Effort',
    'Maximum Principal Hiring Effort',
    'Maturing Duration',
    'Contact Qualification Rate',
    'Leverage Win',
    'Hire Rate',
    'Customer Maturing',
    'Qualified Contacts',
    'Project Leverage',
    'Mature Customers',
    'Products',
    'Total Principals',
    'Average Principal Work Effort',
    'Solution Project Leverage',
    'New Customer Maintenance Effort Per Customer',
    'Maximum Product Effort',
    'Value',
    'Required Delivery Proposal Effort',
    'First Time Delivery Proposal Success',
    'First Time Delivery Lead Success',
    'First Time Delivery Lead Generation',
    'Repeat Delivery Lead Generation',
    'Required Contact Maintenance Effort',
    'Solution Projects Staff Needed',
)

TWODRANK_TOP30_LABELS = (
    'Projects',
    'Consultants',
    'HireRate',
    'Principals',
    'RequiredDelivery Proposal Effort',
    'First Time Delivery Lead Generation',
    'Repeat Delivery Lead Generation',
    'Value',
    'Qualified Contacts',
    'Contact Qualification Rate',
    'Product Marketing Rate',
    'First Time Delivery Lead Success',
    'Repeat Delivery Lead Success',
    'Product Innovation Rate',
    'Total Project Staff Needed',
    'First Time Delivery Proposal Success',
    'New Delivery Proposal Effort',
    'Product Standardization Rate',
    'Maximum Principal Work Effort',
    'Project Leverage',
    'First Time Delivery Proposals',
    'Delivery Project Start',
    'Customer Acquisition',
    'Customers',
    'First Time Delivery Leads',
    'Maximum Principal Hiring Effort',
    'Leverage Win',
    'Required Contact Maintenance Effort',
    'Repeat Delivery Leads',
    'Principal Delivery Proposal Effort',
)
